#include "aq/monomial.hpp"

#include <algorithm>

namespace aq {

Monomial Monomial::leaf(std::string symbol, int weight) {
  if (symbol.empty() || symbol.find_first_of("{},") != std::string::npos)
    throw TermError("generator symbol must be nonempty and free of '{', '}', ','");
  if (weight < 1) throw TermError("generator weight must be >= 1");
  Monomial m;
  m.depth_ = 0;
  m.weight_ = weight;
  m.symbol_ = symbol;
  m.render_ = std::move(symbol);
  return m;
}

Monomial Monomial::node(std::vector<Monomial> children) {
  if (children.empty()) throw TermError("empty multiset in monomial");
  int d = children.front().depth_;
  for (auto& c : children)
    if (c.depth_ != d) throw TermError("mixed depths in one multiset");
  std::sort(children.begin(), children.end(),
            [](const Monomial& a, const Monomial& b) { return a.render_ < b.render_; });
  Monomial m;
  m.depth_ = d + 1;
  m.weight_ = 0;
  std::string r = "{";
  for (size_t i = 0; i < children.size(); ++i) {
    m.weight_ += children[i].weight_;
    if (i) r += ",";
    r += children[i].render_;
  }
  r += "}";
  m.kids_ = std::move(children);
  m.render_ = std::move(r);
  return m;
}

const std::string& Monomial::symbol() const {
  if (depth_ != 0) throw TermError("symbol() on non-leaf monomial");
  return symbol_;
}

const std::vector<Monomial>& Monomial::children() const {
  if (depth_ == 0) throw TermError("children() on leaf monomial");
  return kids_;
}

std::strong_ordering Monomial::operator<=>(const Monomial& o) const {
  if (auto c = depth_ <=> o.depth_; c != 0) return c;
  return render_.compare(o.render_) <=> 0;
}

namespace {

Monomial parse_at(const std::string& s, size_t& pos,
                  const std::function<int(const std::string&)>& leaf_weight) {
  if (pos >= s.size()) throw TermError("unexpected end of monomial text");
  if (s[pos] != '{') {
    size_t end = s.find_first_of("{},", pos);
    if (end == std::string::npos) end = s.size();
    std::string sym = s.substr(pos, end - pos);
    pos = end;
    return Monomial::leaf(sym, leaf_weight(sym));
  }
  ++pos;  // '{'
  std::vector<Monomial> kids;
  while (true) {
    kids.push_back(parse_at(s, pos, leaf_weight));
    if (pos >= s.size()) throw TermError("unterminated multiset in monomial text");
    if (s[pos] == ',') {
      ++pos;
      continue;
    }
    if (s[pos] == '}') {
      ++pos;
      break;
    }
    throw TermError("unexpected character in monomial text at offset " +
                    std::to_string(pos));
  }
  return Monomial::node(std::move(kids));
}

}  // namespace

Monomial Monomial::parse(const std::string& text,
                         const std::function<int(const std::string&)>& leaf_weight) {
  size_t pos = 0;
  Monomial m = parse_at(text, pos, leaf_weight);
  if (pos != text.size()) throw TermError("trailing characters in monomial text");
  return m;
}

}  // namespace aq
