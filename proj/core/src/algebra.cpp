#include "tausilt/algebra.hpp"

#include <algorithm>
#include <cassert>
#include <deque>
#include <random>
#include <set>
#include <sstream>

#include "tausilt/errors.hpp"

namespace tausilt {

int Quiver::vertex_index(const std::string& label) const {
  for (size_t i = 0; i < vertices.size(); ++i)
    if (vertices[i] == label) return static_cast<int>(i);
  return -1;
}

int Quiver::arrow_index(const std::string& name) const {
  for (size_t i = 0; i < arrows.size(); ++i)
    if (arrows[i].name == name) return static_cast<int>(i);
  return -1;
}

namespace {

// deglex: by length, then lexicographically on arrow ids.
bool deglex_less(const Word& a, const Word& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return a < b;
}

struct DeglexCmp {
  bool operator()(const Word& a, const Word& b) const { return deglex_less(a, b); }
};

using LinComb = std::map<Word, Rational, DeglexCmp>;

struct Rule {
  Word head;
  LinComb tail;  // head reduces to tail; every tail term deglex-smaller
};

int src_of(const Quiver& q, const Word& w) { return q.arrows[w.front()].from; }
int tgt_of(const Quiver& q, const Word& w) { return q.arrows[w.back()].to; }

bool composable(const Quiver& q, const Word& w) {
  for (size_t i = 0; i + 1 < w.size(); ++i)
    if (q.arrows[w[i]].to != q.arrows[w[i + 1]].from) return false;
  return true;
}

Word concat(const Word& a, const Word& b) {
  Word out = a;
  out.insert(out.end(), b.begin(), b.end());
  return out;
}

void add_term(LinComb& c, const Word& w, const Rational& coeff) {
  auto it = c.find(w);
  if (it == c.end()) {
    if (!is_zero(coeff)) c.emplace(w, coeff);
    return;
  }
  it->second += coeff;
  if (is_zero(it->second)) c.erase(it);
}

class Rewriter {
 public:
  Rewriter(const Quiver& q, int max_len) : q_(q), max_len_(max_len) {}

  // Leftmost matching rule head inside w; returns position and rule id.
  bool find_occurrence(const Word& w, size_t& pos, int& rule_id) const {
    for (size_t i = 0; i < w.size(); ++i) {
      for (size_t r = 0; r < rules_.size(); ++r) {
        if (!alive_[r]) continue;
        const Word& h = rules_[r].head;
        if (h.size() > w.size() - i) continue;
        if (std::equal(h.begin(), h.end(), w.begin() + i)) {
          pos = i;
          rule_id = static_cast<int>(r);
          return true;
        }
      }
    }
    return false;
  }

  const LinComb& normal_form(const Word& w) {
    auto it = memo_.find(w);
    if (it != memo_.end()) return it->second;
    LinComb out;
    size_t pos;
    int rid;
    if (!find_occurrence(w, pos, rid)) {
      out.emplace(w, Rational(1));
    } else {
      const Rule& rule = rules_[rid];
      Word prefix(w.begin(), w.begin() + pos);
      Word suffix(w.begin() + pos + rule.head.size(), w.end());
      for (const auto& [t, c] : rule.tail) {
        Word sub = concat(concat(prefix, t), suffix);
        const LinComb& nf = normal_form(sub);
        for (const auto& [nw, nc] : nf) add_term(out, nw, c * nc);
      }
    }
    return memo_.emplace(w, std::move(out)).first->second;
  }

  LinComb reduce(const LinComb& row) {
    LinComb out;
    for (const auto& [w, c] : row) {
      const LinComb& nf = normal_form(w);
      for (const auto& [nw, nc] : nf) add_term(out, nw, c * nc);
    }
    return out;
  }

  void complete(std::deque<LinComb> pending) {
    while (!pending.empty()) {
      LinComb row = reduce(pending.front());
      pending.pop_front();
      if (row.empty()) continue;
      Word head = row.rbegin()->first;  // deglex-largest term
      if (static_cast<int>(head.size()) >= max_len_)
        throw NotFiniteDimensional("rewriting head reached the path-length cap " +
                                   std::to_string(max_len_));
      Rational lead = row.rbegin()->second;
      LinComb tail;
      for (const auto& [w, c] : row)
        if (w != head) tail.emplace(w, -c / lead);
      // Retire rules whose head contains the new head; their content is
      // re-enqueued and re-reduced.
      for (size_t r = 0; r < rules_.size(); ++r) {
        if (!alive_[r]) continue;
        if (contains_subword(rules_[r].head, head)) {
          LinComb old;
          add_term(old, rules_[r].head, Rational(1));
          for (const auto& [w, c] : rules_[r].tail) add_term(old, w, -c);
          pending.push_back(std::move(old));
          alive_[r] = false;
        }
      }
      memo_.clear();
      int new_id = static_cast<int>(rules_.size());
      rules_.push_back(Rule{head, std::move(tail)});
      alive_.push_back(true);
      // Overlap ambiguities with every live rule (both orders, including self).
      for (size_t r = 0; r < rules_.size(); ++r) {
        if (!alive_[r]) continue;
        enqueue_overlaps(static_cast<int>(r), new_id, pending);
        if (static_cast<int>(r) != new_id) enqueue_overlaps(new_id, static_cast<int>(r), pending);
      }
    }
  }

  const std::vector<Rule>& rules() const { return rules_; }
  const std::vector<bool>& alive() const { return alive_; }

 private:
  static bool contains_subword(const Word& w, const Word& h) {
    if (h.size() > w.size()) return false;
    for (size_t i = 0; i + h.size() <= w.size(); ++i)
      if (std::equal(h.begin(), h.end(), w.begin() + i)) return true;
    return false;
  }

  // Ambiguities where a proper suffix of head(r1) equals a proper prefix of
  // head(r2): word a.b.c with h1 = a.b, h2 = b.c.
  void enqueue_overlaps(int r1, int r2, std::deque<LinComb>& pending) {
    const Word& h1 = rules_[r1].head;
    const Word& h2 = rules_[r2].head;
    for (size_t blen = 1; blen < h1.size() && blen < h2.size(); ++blen) {
      if (!std::equal(h1.end() - blen, h1.end(), h2.begin())) continue;
      Word a(h1.begin(), h1.end() - blen);
      Word c(h2.begin() + blen, h2.end());
      // reduce h1 at the front vs h2 at the back, take the difference
      LinComb row;
      for (const auto& [t, coef] : rules_[r1].tail) add_term(row, concat(t, c), coef);
      for (const auto& [t, coef] : rules_[r2].tail) add_term(row, concat(a, t), -coef);
      if (!row.empty()) pending.push_back(std::move(row));
    }
  }

  const Quiver& q_;
  int max_len_;
  std::vector<Rule> rules_;
  std::vector<bool> alive_;
  std::map<Word, LinComb> memo_;
};

void validate_relations(const Quiver& q, const std::vector<Relation>& rels) {
  for (const Relation& rel : rels) {
    if (rel.empty()) throw ParseError("empty relation");
    int s = -1, t = -1;
    for (const RelationTerm& term : rel) {
      if (term.path.size() < 2)
        throw ParseError("relation path shorter than 2 (not admissible)");
      for (int a : term.path)
        if (a < 0 || a >= static_cast<int>(q.arrows.size()))
          throw ParseError("relation references unknown arrow");
      if (!composable(q, term.path)) throw ParseError("relation path is not composable");
      int ws = src_of(q, term.path), wt = tgt_of(q, term.path);
      if (s == -1) {
        s = ws;
        t = wt;
      } else if (ws != s || wt != t) {
        throw ParseError("relation terms are not parallel paths");
      }
    }
  }
}

}  // namespace

BoundQuiverAlgebra BoundQuiverAlgebra::build(const Quiver& q, const std::vector<Relation>& rels,
                                             int max_len, unsigned seed) {
  validate_relations(q, rels);
  const int n = static_cast<int>(q.vertices.size());

  Rewriter rw(q, max_len);
  {
    std::deque<LinComb> pending;
    for (const Relation& rel : rels) {
      LinComb row;
      for (const RelationTerm& term : rel) add_term(row, term.path, term.coeff);
      if (!row.empty()) pending.push_back(std::move(row));
    }
    rw.complete(std::move(pending));
  }

  BoundQuiverAlgebra A;
  A.quiver_ = q;
  A.relations_ = rels;

  // Vertex idempotents first.
  for (int v = 0; v < n; ++v) {
    A.words_.push_back(Word{});
    A.src_.push_back(v);
    A.tgt_.push_back(v);
  }
  // Normal words stratum by stratum until a stratum is empty.
  std::vector<Word> stratum;
  for (size_t a = 0; a < q.arrows.size(); ++a) stratum.push_back(Word{static_cast<int>(a)});
  std::sort(stratum.begin(), stratum.end());
  int length = 1;
  while (!stratum.empty()) {
    if (length >= max_len)
      throw NotFiniteDimensional("no empty path stratum below the cap " + std::to_string(max_len));
    for (const Word& w : stratum) {
      A.words_.push_back(w);
      A.src_.push_back(src_of(q, w));
      A.tgt_.push_back(tgt_of(q, w));
    }
    std::vector<Word> next;
    for (const Word& w : stratum) {
      int t = tgt_of(q, w);
      for (size_t a = 0; a < q.arrows.size(); ++a) {
        if (q.arrows[a].from != t) continue;
        Word ext = w;
        ext.push_back(static_cast<int>(a));
        size_t pos;
        int rid;
        if (!rw.find_occurrence(ext, pos, rid)) next.push_back(std::move(ext));
      }
    }
    std::sort(next.begin(), next.end());
    stratum = std::move(next);
    ++length;
  }
  A.nilpotency_ = length;

  const int dim = static_cast<int>(A.words_.size());
  for (int i = 0; i < dim; ++i) A.word_index_[A.words_[i]] = i;

  // Multiplication table over normal words.
  A.table_.assign(dim, std::vector<AlgElem>(dim));
  auto nf_coords = [&](const Word& w) {
    AlgElem out(dim);
    // normal_form is only valid on nonempty words
    for (const auto& [nw, c] : const_cast<Rewriter&>(rw).normal_form(w)) {
      auto it = A.word_index_.find(nw);
      // A normal word longer than every basis word lies in rad^L = 0.
      if (it != A.word_index_.end()) out[it->second] = c;
    }
    return out;
  };
  for (int i = 0; i < dim; ++i)
    for (int j = 0; j < dim; ++j) {
      AlgElem prod(dim);
      if (A.tgt_[i] == A.src_[j]) {
        if (A.words_[i].empty() && A.words_[j].empty()) {
          prod[i] = 1;
        } else if (A.words_[i].empty()) {
          prod[j] = 1;
        } else if (A.words_[j].empty()) {
          prod[i] = 1;
        } else {
          prod = nf_coords(concat(A.words_[i], A.words_[j]));
        }
      }
      A.table_[i][j] = std::move(prod);
    }

  // Hom space index: Hom(P_i, P_j) = e_j A e_i = words j -> i.
  A.hom_.assign(n, std::vector<std::vector<int>>(n));
  for (int w = 0; w < dim; ++w) A.hom_[A.tgt_[w]][A.src_[w]].push_back(w);

  // Semantic admissibility: the arrow ideal must be nilpotent. Iterate the
  // span of products arrow * (previous power); a non-vanishing fixed point
  // means the relations do not cut out an admissible ideal.
  {
    auto span_basis = [&](const std::vector<AlgElem>& vecs) {
      RatMatrix m(dim, static_cast<int>(vecs.size()));
      for (size_t c = 0; c < vecs.size(); ++c)
        for (int r = 0; r < dim; ++r) m.at(r, static_cast<int>(c)) = vecs[c][r];
      std::vector<int> piv;
      rref(m.transpose(), &piv);
      RatMatrix red = rref(m.transpose());
      std::vector<AlgElem> out;
      for (int r = 0; r < red.rows(); ++r) {
        AlgElem v(dim);
        bool nonzero = false;
        for (int k = 0; k < dim; ++k) {
          v[k] = red.at(r, k);
          nonzero = nonzero || !is_zero(v[k]);
        }
        if (nonzero) out.push_back(std::move(v));
      }
      return out;
    };
    std::vector<AlgElem> power;
    for (int w = 0; w < dim; ++w)
      if (!A.words_[w].empty()) power.push_back(A.elem_of_word(w));
    power = span_basis(power);
    int steps = 0;
    while (!power.empty()) {
      if (++steps > dim + 1)
        throw NotFiniteDimensional("relations are not admissible: the arrow ideal is not nilpotent");
      std::vector<AlgElem> next;
      for (const AlgElem& u : power)
        for (int w = 0; w < dim; ++w) {
          if (A.words_[w].size() != 1) continue;
          AlgElem prod = A.mult(u, A.elem_of_word(w));
          bool nonzero = false;
          for (int k = 0; k < dim; ++k) nonzero = nonzero || !is_zero(prod[k]);
          if (nonzero) next.push_back(std::move(prod));
        }
      power = span_basis(next);
    }
  }

  // Associativity audit of the table: full below a size threshold, sampled
  // above it.
  {
    std::mt19937_64 rng(seed);
    auto check_triple = [&](int a, int b, int c) {
      AlgElem ab = A.table_[a][b];
      AlgElem left = A.mult(ab, A.elem_of_word(c));
      AlgElem bc = A.table_[b][c];
      AlgElem right = A.mult(A.elem_of_word(a), bc);
      if (left != right) throw std::logic_error("multiplication table is not associative");
    };
    if (dim <= 12) {
      for (int a = 0; a < dim; ++a)
        for (int b = 0; b < dim; ++b)
          for (int c = 0; c < dim; ++c) check_triple(a, b, c);
    } else {
      for (int s = 0; s < 2000; ++s)
        check_triple(static_cast<int>(rng() % dim), static_cast<int>(rng() % dim),
                     static_cast<int>(rng() % dim));
    }
  }
  return A;
}

AlgElem BoundQuiverAlgebra::mult(const AlgElem& u, const AlgElem& v) const {
  AlgElem out(dim());
  for (int i = 0; i < dim(); ++i) {
    if (is_zero(u[i])) continue;
    for (int j = 0; j < dim(); ++j) {
      if (is_zero(v[j])) continue;
      const AlgElem& t = table_[i][j];
      for (int k = 0; k < dim(); ++k)
        if (!is_zero(t[k])) out[k] += u[i] * v[j] * t[k];
    }
  }
  return out;
}

AlgElem BoundQuiverAlgebra::elem_of_word(int idx) const {
  AlgElem e(dim());
  e[idx] = 1;
  return e;
}

AlgElem BoundQuiverAlgebra::local_inverse(const AlgElem& u, int v) const {
  // Solve u * x = e_v inside e_v A e_v.
  const std::vector<int>& basis = hom_[v][v];
  const int m = static_cast<int>(basis.size());
  RatMatrix lhs(m, m);
  RatVec rhs(m);
  for (int col = 0; col < m; ++col) {
    AlgElem prod = mult(u, elem_of_word(basis[col]));
    for (int row = 0; row < m; ++row) lhs.at(row, col) = prod[basis[row]];
  }
  for (int row = 0; row < m; ++row) rhs[row] = (basis[row] == v) ? Rational(1) : Rational(0);
  SolveResult sol = solve(lhs, rhs);
  if (!sol.solvable) throw std::logic_error("local_inverse: element is not invertible");
  AlgElem out(dim());
  for (int k = 0; k < m; ++k) out[basis[k]] = sol.particular[k];
  return out;
}

std::string BoundQuiverAlgebra::word_name(int idx) const {
  if (words_[idx].empty()) return "e_" + quiver_.vertices[src_[idx]];
  std::ostringstream os;
  for (size_t k = 0; k < words_[idx].size(); ++k) {
    if (k) os << ".";
    os << quiver_.arrows[words_[idx][k]].name;
  }
  return os.str();
}

std::string BoundQuiverAlgebra::elem_str(const AlgElem& u) const {
  std::ostringstream os;
  bool first = true;
  for (int i = 0; i < dim(); ++i) {
    if (is_zero(u[i])) continue;
    if (!first) os << " + ";
    os << to_string(u[i]) << "*" << word_name(i);
    first = false;
  }
  if (first) os << "0";
  return os.str();
}

std::vector<RatMatrix> radical_of_endo(const std::vector<RatMatrix>& algebra_basis) {
  const int m = static_cast<int>(algebra_basis.size());
  if (m == 0) return {};
  RatMatrix gram(m, m);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) {
      RatMatrix prod = algebra_basis[i] * algebra_basis[j];
      Rational tr(0);
      for (int d = 0; d < prod.rows(); ++d) tr += prod.at(d, d);
      gram.at(i, j) = tr;
    }
  std::vector<RatMatrix> rad;
  for (const RatVec& v : kernel_basis(gram)) {
    RatMatrix elem(algebra_basis[0].rows(), algebra_basis[0].cols());
    for (int i = 0; i < m; ++i) {
      if (is_zero(v[i])) continue;
      for (int r = 0; r < elem.rows(); ++r)
        for (int c = 0; c < elem.cols(); ++c) elem.at(r, c) += v[i] * algebra_basis[i].at(r, c);
    }
    rad.push_back(std::move(elem));
  }
  return rad;
}

}  // namespace tausilt
