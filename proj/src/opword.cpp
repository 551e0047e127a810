#include "aq/opword.hpp"

#include <sstream>

namespace aq {

std::vector<int> coface(int i, int m) {
  if (i < 0 || i > m + 1) throw OpError("coface index out of range");
  std::vector<int> v(m + 1);
  for (int j = 0; j <= m; ++j) v[j] = j < i ? j : j + 1;
  return v;
}

std::vector<int> codegeneracy(int i, int m) {
  if (m < 1 || i < 0 || i > m - 1) throw OpError("codegeneracy index out of range");
  std::vector<int> v(m + 1);
  for (int j = 0; j <= m; ++j) v[j] = j <= i ? j : j - 1;
  return v;
}

int OpWord::source_level() const {
  if (ops_.empty()) throw OpError("empty word has no fixed level");
  return ops_.front().q;
}

int OpWord::target_level() const {
  int lvl = source_level();
  for (auto& op : ops_) {
    if (op.q != lvl)
      throw OpError("word level mismatch: expected q=" + std::to_string(lvl) +
                    ", got q=" + std::to_string(op.q));
    if (op.i < 0 || op.i > op.q) throw OpError("operator index out of range");
    lvl += op.is_counit ? -1 : 1;
  }
  return lvl;
}

std::vector<int> OpWord::normal_form() const {
  int src = source_level();
  int tgt = target_level();  // validates the word
  (void)tgt;
  // theta = theta_{op_1} . theta_{op_2} . ... (first-applied op outermost)
  std::vector<int> theta;  // composed so far, [current]->[src]
  bool have = false;
  int cur = src;
  for (auto& op : ops_) {
    std::vector<int> step = op.is_counit ? coface(op.i, op.q - 1)
                                         : codegeneracy(op.i, op.q + 1);
    cur += op.is_counit ? -1 : 1;
    if (!have) {
      theta = std::move(step);
      have = true;
    } else {
      std::vector<int> next(step.size());
      for (size_t j = 0; j < step.size(); ++j) next[j] = theta[step[j]];
      theta = std::move(next);
    }
  }
  if (!have) {
    theta.resize(src + 1);
    for (int j = 0; j <= src; ++j) theta[j] = j;
  }
  return theta;
}

AlgebraElement OpWord::apply(const AlgebraElement& x, const LeafAlgebra* base) const {
  AlgebraElement cur = x;
  for (auto& op : ops_) {
    if (cur.is_zero()) break;
    if (cur.depth() != op.q + 1)
      throw OpError("operand depth " + std::to_string(cur.depth()) +
                    " does not match operator level q=" + std::to_string(op.q));
    cur = op.is_counit ? counit_layer(cur, op.q - op.i, base)
                       : comult_layer(cur, op.q - op.i);
  }
  return cur;
}

std::string OpWord::str() const {
  std::ostringstream os;
  for (size_t k = 0; k < ops_.size(); ++k) {
    if (k) os << " ; ";
    os << (ops_[k].is_counit ? "D(" : "S(") << ops_[k].i << "," << ops_[k].q << ")";
  }
  return os.str();
}

bool OpWord::same_transformation(const OpWord& other) const {
  if (ops_.empty() && other.ops_.empty()) return true;
  if (ops_.empty() || other.ops_.empty())
    return false;  // an empty word matches any identity, but levels are unknown
  return source_level() == other.source_level() &&
         target_level() == other.target_level() &&
         normal_form() == other.normal_form();
}

}  // namespace aq
