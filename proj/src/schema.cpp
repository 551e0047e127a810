#include "aq/schema.hpp"

#include <fstream>
#include <optional>
#include <sstream>

namespace aq {

namespace {

std::vector<std::string> tokenize(const std::string& line) {
  std::vector<std::string> toks;
  std::istringstream is(line);
  std::string t;
  while (is >> t) {
    if (t[0] == '#') break;
    toks.push_back(t);
  }
  return toks;
}

Coeff parse_coeff(const Field& F, const std::string& s, int line) {
  try {
    mpq_class q(s);
    q.canonicalize();
    return F.reduce(q);
  } catch (const std::exception&) {
    throw SchemaError(line, "bad coefficient '" + s + "'");
  }
}

// lincomb tokens: either {"0"} or term (+ term)* with term = c*lbl or lbl
LinComb parse_comb(const Field& F, const std::vector<std::string>& toks,
                   size_t from, int line) {
  if (from >= toks.size()) throw SchemaError(line, "missing right-hand side");
  if (toks.size() == from + 1 && toks[from] == "0") return {};
  LinComb out;
  bool expect_term = true;
  for (size_t k = from; k < toks.size(); ++k) {
    if (!expect_term) {
      if (toks[k] != "+") throw SchemaError(line, "expected '+' before '" + toks[k] + "'");
      expect_term = true;
      continue;
    }
    const std::string& t = toks[k];
    auto star = t.find('*');
    if (star == std::string::npos) {
      out.emplace_back(t, Coeff(1));
    } else {
      std::string c = t.substr(0, star), l = t.substr(star + 1);
      if (l.empty()) throw SchemaError(line, "missing label after '*' in '" + t + "'");
      out.emplace_back(l, parse_coeff(F, c, line));
    }
    expect_term = false;
  }
  if (expect_term) throw SchemaError(line, "dangling '+'");
  return out;
}

int parse_int(const std::string& s, int line, const char* what) {
  try {
    size_t pos = 0;
    int v = std::stoi(s, &pos);
    if (pos != s.size()) throw std::invalid_argument(s);
    return v;
  } catch (const std::exception&) {
    throw SchemaError(line, std::string("bad ") + what + " '" + s + "'");
  }
}

}  // namespace

SimplicialAlgebra parse_algebra(std::istream& in) {
  std::optional<Field> F;
  std::optional<std::pair<int, int>> trunc;
  std::string name;
  std::optional<SimplicialAlgebra> X;
  std::string line;
  int lineno = 0;

  auto need_header = [&](int line) -> SimplicialAlgebra& {
    if (!X) {
      if (!F) throw SchemaError(line, "'field' must come first");
      if (!trunc) throw SchemaError(line, "'truncation' must come before generators");
      X.emplace(*F, trunc->first, trunc->second, name);
    }
    return *X;
  };
  auto check_label = [&](int n, const std::string& l, int line) {
    if (!X || !X->weight_of(n, l))
      throw SchemaError(line, "unknown generator '" + l + "' at level " +
                                  std::to_string(n) + " (declare generators first)");
  };

  while (std::getline(in, line)) {
    ++lineno;
    auto toks = tokenize(line);
    if (toks.empty()) continue;
    const std::string& kw = toks[0];
    try {
      if (kw == "field") {
        if (toks.size() != 2) throw SchemaError(lineno, "usage: field q | fp:<p>");
        if (X) throw SchemaError(lineno, "'field' after generators");
        if (toks[1] == "q") {
          F = Field::rationals();
        } else if (toks[1].rfind("fp:", 0) == 0) {
          F = Field::prime(parse_int(toks[1].substr(3), lineno, "prime"));
        } else {
          throw SchemaError(lineno, "field must be 'q' or 'fp:<p>'");
        }
      } else if (kw == "truncation") {
        if (toks.size() != 3) throw SchemaError(lineno, "usage: truncation <N> <W>");
        if (X) throw SchemaError(lineno, "'truncation' after generators");
        trunc = {parse_int(toks[1], lineno, "degree bound"),
                 parse_int(toks[2], lineno, "weight bound")};
      } else if (kw == "name") {
        if (toks.size() < 2) throw SchemaError(lineno, "usage: name <string>");
        if (X) throw SchemaError(lineno, "'name' after generators");
        name = toks[1];
      } else if (kw == "gen") {
        if (toks.size() != 4) throw SchemaError(lineno, "usage: gen <degree> <symbol> <weight>");
        need_header(lineno).add_generator(parse_int(toks[1], lineno, "degree"), toks[2],
                                          parse_int(toks[3], lineno, "weight"));
      } else if (kw == "face" || kw == "deg") {
        if (toks.size() < 6 || toks[4] != "=")
          throw SchemaError(lineno, "usage: " + kw + " <i> <n> <symbol> = <lincomb>");
        int i = parse_int(toks[1], lineno, "index");
        int n = parse_int(toks[2], lineno, "level");
        SimplicialAlgebra& A = need_header(lineno);
        check_label(n, toks[3], lineno);
        if (i < 0 || i > n) throw SchemaError(lineno, "index out of range for level");
        LinComb img = parse_comb(*F, toks, 5, lineno);
        int target = kw == "face" ? n - 1 : n + 1;
        if (kw == "face" && n == 0) throw SchemaError(lineno, "face at level 0");
        if (target > A.max_degree())
          throw SchemaError(lineno, "degeneracy target exceeds truncation");
        for (auto& [l, c] : img) check_label(target, l, lineno);
        if (kw == "face")
          A.set_face(i, n, toks[3], std::move(img));
        else
          A.set_degen(i, n, toks[3], std::move(img));
      } else if (kw == "mul") {
        if (toks.size() < 6 || toks[4] != "=")
          throw SchemaError(lineno, "usage: mul <n> <a> <b> = <lincomb>");
        int n = parse_int(toks[1], lineno, "level");
        SimplicialAlgebra& A = need_header(lineno);
        check_label(n, toks[2], lineno);
        check_label(n, toks[3], lineno);
        LinComb img = parse_comb(*F, toks, 5, lineno);
        for (auto& [l, c] : img) check_label(n, l, lineno);
        A.set_mult(n, toks[2], toks[3], std::move(img));
      } else {
        throw SchemaError(lineno, "unknown directive '" + kw + "'");
      }
    } catch (const SchemaError&) {
      throw;
    } catch (const std::exception& e) {
      throw SchemaError(lineno, e.what());
    }
  }
  if (!X) {
    if (!F) throw SchemaError(lineno, "empty input: missing 'field'");
    if (!trunc) throw SchemaError(lineno, "missing 'truncation'");
    X.emplace(*F, trunc->first, trunc->second, name);
  }
  return std::move(*X);
}

SimplicialAlgebra parse_algebra_text(const std::string& text) {
  std::istringstream is(text);
  return parse_algebra(is);
}

SimplicialAlgebra parse_algebra_file(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw SchemaError(0, "cannot open '" + path + "'");
  return parse_algebra(f);
}

namespace {

std::string comb_text(const LinComb& c) {
  if (c.empty()) return "0";
  std::string s;
  for (size_t i = 0; i < c.size(); ++i) {
    if (i) s += " + ";
    if (c[i].second == 1)
      s += c[i].first;
    else
      s += coeff_str(c[i].second) + "*" + c[i].first;
  }
  return s;
}

}  // namespace

std::string SchemaWriter::serialize(const SimplicialAlgebra& X) {
  std::ostringstream os;
  os << "field " << (X.field().is_rational() ? "q" : "fp:" + std::to_string(X.field().characteristic())) << "\n";
  os << "truncation " << X.max_degree() << " " << X.max_weight() << "\n";
  if (!X.name().empty()) os << "name " << X.name() << "\n";
  for (auto& [n, gl] : X.gens_)
    for (auto& g : gl) os << "gen " << n << " " << g.symbol << " " << g.weight << "\n";
  for (auto& [key, cols] : X.face_)
    for (auto& [src, img] : cols)
      os << "face " << key.first << " " << key.second << " " << src << " = "
         << comb_text(img) << "\n";
  for (auto& [key, cols] : X.degen_)
    for (auto& [src, img] : cols)
      os << "deg " << key.first << " " << key.second << " " << src << " = "
         << comb_text(img) << "\n";
  for (auto& [n, table] : X.mult_)
    for (auto& [pair, img] : table)
      os << "mul " << n << " " << pair.first << " " << pair.second << " = "
         << comb_text(img) << "\n";
  return os.str();
}

std::string SchemaWriter::serialize_blocks(const BlockSpace& V, const std::string& name) {
  std::ostringstream os;
  const Field& F = V.field();
  os << "field " << (F.is_rational() ? "q" : "fp:" + std::to_string(F.characteristic())) << "\n";
  os << "truncation " << V.max_degree() << " " << V.max_weight() << "\n";
  if (!name.empty()) os << "name " << name << "\n";
  for (int n = 0; n <= V.max_degree(); ++n)
    for (int w = 0; w <= V.max_weight(); ++w)
      for (auto& l : V.block(n, w)->labels()) os << "gen " << n << " " << l << " " << w << "\n";
  auto emit = [&](const char* kw, const LinearMap& m, int i, int n) {
    for (int c = 0; c < m.domain().dim(); ++c) {
      LinComb img;
      for (auto& [row, v] : m.column(c)) img.emplace_back(m.codomain().label(row), v);
      os << kw << " " << i << " " << n << " " << m.domain().label(c) << " = "
         << comb_text(img) << "\n";
    }
  };
  for (int n = 0; n <= V.max_degree(); ++n)
    for (int w = 0; w <= V.max_weight(); ++w)
      for (int i = 0; i <= n; ++i) {
        if (n >= 1) emit("face", V.face(i, n, w), i, n);
        if (n + 1 <= V.max_degree()) emit("deg", V.degen(i, n, w), i, n);
      }
  return os.str();
}

}  // namespace aq
