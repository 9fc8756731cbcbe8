#pragma once

// Line-oriented text fixtures describing named objects and morphisms.
// Parse errors carry the 1-based line number; serialization round-trips
// exactly because scalars are written in canonical form.
//
//   object V
//   ring rat
//   dim 2
//   gram
//   1 0
//   0 2
//   end
//
//   morphism f
//   dom V
//   cod W
//   mat
//   1/2 -1
//   end

#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "hilbcat/hmorphism.hpp"

namespace hilbcat {

struct Fixture {
  std::vector<std::pair<std::string, HObject>> objects;
  std::vector<std::pair<std::string, HMorphism>> morphisms;

  const HObject* find_object(const std::string& name) const {
    for (const auto& [n, o] : objects)
      if (n == name) return &o;
    return nullptr;
  }
  const HMorphism* find_morphism(const std::string& name) const {
    for (const auto& [n, m] : morphisms)
      if (n == name) return &m;
    return nullptr;
  }
};

namespace detail {

inline std::vector<std::string> split_ws(const std::string& line) {
  std::vector<std::string> out;
  std::istringstream in(line);
  std::string tok;
  while (in >> tok) out.push_back(tok);
  return out;
}

struct FixtureParser {
  std::istringstream in;
  size_t lineno = 0;

  explicit FixtureParser(const std::string& text) : in(text) {}

  [[noreturn]] void die(const std::string& msg) const {
    throw error("line " + std::to_string(lineno) + ": " + msg);
  }

  /// Next non-blank, non-comment line, or empty optional at end of input.
  std::optional<std::string> next_line() {
    std::string line;
    while (std::getline(in, line)) {
      ++lineno;
      size_t h = line.find('#');
      if (h != std::string::npos) line = line.substr(0, h);
      if (!split_ws(line).empty()) return line;
    }
    return std::nullopt;
  }

  std::string expect_line() {
    auto l = next_line();
    if (!l) die("unexpected end of input");
    return *l;
  }

  std::string expect_kv(const std::string& key) {
    auto toks = split_ws(expect_line());
    if (toks.size() != 2 || toks[0] != key)
      die("expected '" + key + " <value>'");
    return toks[1];
  }

  Matrix read_matrix(ScalarRing ring, size_t rows, size_t cols) {
    Matrix m(ring, rows, cols);
    for (size_t i = 0; i < rows; ++i) {
      auto toks = split_ws(expect_line());
      if (toks.size() != cols)
        die("expected " + std::to_string(cols) + " entries, got " +
            std::to_string(toks.size()));
      for (size_t j = 0; j < cols; ++j) {
        try {
          m.at(i, j) = parse_scalar(ring, toks[j]);
        } catch (const error& e) {
          die(e.what());
        }
      }
    }
    auto end = split_ws(expect_line());
    if (end.size() != 1 || end[0] != "end") die("expected 'end'");
    return m;
  }

  Fixture parse() {
    Fixture fx;
    while (auto line = next_line()) {
      auto toks = split_ws(*line);
      if (toks.size() != 2) die("expected 'object <name>' or 'morphism <name>'");
      if (toks[0] == "object") {
        std::string name = toks[1];
        if (fx.find_object(name)) die("duplicate object '" + name + "'");
        std::string ring_name = expect_kv("ring");
        auto ring = ScalarRing::from_name(ring_name);
        if (!ring) die("unknown ring '" + ring_name + "'");
        size_t dim = 0;
        try {
          dim = std::stoul(expect_kv("dim"));
        } catch (const std::exception&) {
          die("bad dimension");
        }
        auto gram_kw = split_ws(expect_line());
        if (gram_kw.size() != 1 || gram_kw[0] != "gram") die("expected 'gram'");
        Matrix g = read_matrix(*ring, dim, dim);
        try {
          fx.objects.emplace_back(name, HObject(*ring, dim, std::move(g)));
        } catch (const error& e) {
          die("object '" + name + "': " + e.what());
        }
      } else if (toks[0] == "morphism") {
        std::string name = toks[1];
        if (fx.find_morphism(name)) die("duplicate morphism '" + name + "'");
        std::string dom_name = expect_kv("dom");
        std::string cod_name = expect_kv("cod");
        const HObject* dom = fx.find_object(dom_name);
        const HObject* cod = fx.find_object(cod_name);
        if (!dom) die("unknown object '" + dom_name + "'");
        if (!cod) die("unknown object '" + cod_name + "'");
        auto mat_kw = split_ws(expect_line());
        if (mat_kw.size() != 1 || mat_kw[0] != "mat") die("expected 'mat'");
        if (dom->ring() != cod->ring()) die("dom and cod over different rings");
        Matrix m = read_matrix(dom->ring(), cod->dim(), dom->dim());
        fx.morphisms.emplace_back(name, HMorphism(*dom, *cod, std::move(m)));
      } else {
        die("expected 'object' or 'morphism', got '" + toks[0] + "'");
      }
    }
    return fx;
  }
};

}  // namespace detail

inline Fixture parse_fixture(const std::string& text) {
  return detail::FixtureParser(text).parse();
}

namespace detail {

inline void write_matrix_rows(std::string& out, const Matrix& m) {
  for (size_t i = 0; i < m.rows(); ++i) {
    for (size_t j = 0; j < m.cols(); ++j) {
      if (j) out += ' ';
      out += to_string(m.at(i, j));
    }
    out += '\n';
  }
  out += "end\n";
}

}  // namespace detail

inline std::string serialize_fixture(const Fixture& fx) {
  std::string out;
  for (const auto& [name, obj] : fx.objects) {
    out += "object " + name + "\n";
    out += "ring " + obj.ring().name() + "\n";
    out += "dim " + std::to_string(obj.dim()) + "\n";
    out += "gram\n";
    detail::write_matrix_rows(out, obj.gram());
    out += "\n";
  }
  for (const auto& [name, mor] : fx.morphisms) {
    std::string dom = "?", cod = "?";
    for (const auto& [n, o] : fx.objects) {
      if (o == mor.dom()) dom = n;
      if (o == mor.cod()) cod = n;
    }
    out += "morphism " + name + "\n";
    out += "dom " + dom + "\n";
    out += "cod " + cod + "\n";
    out += "mat\n";
    detail::write_matrix_rows(out, mor.mat());
    out += "\n";
  }
  return out;
}

}  // namespace hilbcat
