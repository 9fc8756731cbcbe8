#pragma once

#include "hilbcat/dagcat.hpp"
#include "hilbcat/error.hpp"
#include "hilbcat/finite_semimodule.hpp"
#include "hilbcat/fixture.hpp"
#include "hilbcat/functors.hpp"
#include "hilbcat/generator.hpp"
#include "hilbcat/hmorphism.hpp"
#include "hilbcat/hobject.hpp"
#include "hilbcat/laws.hpp"
#include "hilbcat/matrix.hpp"
#include "hilbcat/ring_checks.hpp"
#include "hilbcat/scalar.hpp"
#include "hilbcat/semiring_hom.hpp"
