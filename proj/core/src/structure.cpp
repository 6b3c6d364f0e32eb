#include "voalab/structure.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <unordered_map>

#include "voalab/linalg.hpp"
#include "voalab/named.hpp"
#include "voalab/twisted.hpp"
#include "voalab/vertex.hpp"

namespace voalab {

namespace {

Integer factorial(int n) {
  Integer r;
  mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
  return r;
}

Rational monomial_norm(const Monomial& m) {
  Integer v = 1;
  for (int k = 1; k <= m.top(); ++k) {
    const int c = m.count(k);
    if (!c) continue;
    Integer kp;
    mpz_ui_pow_ui(kp.get_mpz_t(), static_cast<unsigned long>(k), static_cast<unsigned long>(c));
    v *= kp * factorial(c);
  }
  if (m.length() % 2) v = -v;
  const Rational lw = frac(m.q8() * m.q8(), 16);
  if (lw.get_den() == 1 && mpz_odd_p(lw.get_num_mpz_t())) v = -v;
  return Rational(v);
}

}  // namespace

Scalar pair(const State& u, const State& v) {
  const State& a = u.size() <= v.size() ? u : v;
  const State& b = u.size() <= v.size() ? v : u;
  Scalar out;
  for (const auto& [m, c] : a.terms()) {
    Monomial partner(m);
    partner.set_q8(-m.q8());
    auto it = b.terms().find(partner);
    if (it == b.terms().end()) continue;
    Scalar t = c * it->second;
    t *= monomial_norm(m);
    out += t;
  }
  return out;
}

std::vector<std::vector<Scalar>> gram(const std::vector<State>& states) {
  const std::size_t n = states.size();
  std::vector<std::vector<Scalar>> g(n, std::vector<Scalar>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) g[i][j] = g[j][i] = pair(states[i], states[j]);
  return g;
}

bool is_primary(const State& v) {
  const Rational w = v.weight();
  const long top = mpz_class(w.get_num() / w.get_den()).get_si();
  for (long n = 1; n <= top; ++n)
    if (!virasoro(static_cast<int>(n), v).is_zero()) return false;
  return true;
}

std::string VirasoroWord::to_string() const {
  std::string out;
  for (std::size_t k = 0; k < parts.size();) {
    std::size_t e = k;
    while (e < parts.size() && parts[e] == parts[k]) ++e;
    out += "L(-" + std::to_string(parts[k]) + ")";
    if (e - k > 1) out += "^" + std::to_string(e - k);
    k = e;
  }
  switch (base) {
    case WordBase::Vacuum: out += "1"; break;
    case WordBase::U16: out += "u16"; break;
    case WordBase::U9: out += "u9"; break;
  }
  return out;
}

const State& word_base(WordBase base) {
  switch (base) {
    case WordBase::Vacuum: {
      static const State one = State::vacuum();
      return one;
    }
    case WordBase::U16: return named_vector("u16");
    case WordBase::U9: return named_vector("u9");
  }
  throw std::logic_error("unknown word base");
}

static int base_weight(WordBase b) {
  switch (b) {
    case WordBase::Vacuum: return 0;
    case WordBase::U16: return 16;
    case WordBase::U9: return 9;
  }
  return 0;
}

std::vector<VirasoroWord> vacuum_words(int weight, WordBase base) {
  std::vector<VirasoroWord> out;
  const int rest = weight - base_weight(base);
  if (rest < 0) return out;
  for (auto& p : partitions(rest, base == WordBase::Vacuum ? 2 : 1)) out.push_back({p, base});
  return out;
}

namespace {

struct TrieNode {
  std::map<int, int> children;
  std::vector<int> words;  // indices of words ending here
};

void trie_visit(const std::vector<TrieNode>& nodes, int node, const State& cur, std::vector<State>& out) {
  for (int w : nodes[node].words) out[w] = cur;
  for (const auto& [part, child] : nodes[node].children)
    trie_visit(nodes, child, virasoro(-part, cur), out);
}

}  // namespace

std::vector<State> apply_words(const std::vector<VirasoroWord>& words) {
  std::vector<State> out(words.size());
  for (WordBase base : {WordBase::Vacuum, WordBase::U16, WordBase::U9}) {
    std::vector<TrieNode> nodes(1);
    bool any = false;
    for (std::size_t w = 0; w < words.size(); ++w) {
      if (words[w].base != base) continue;
      any = true;
      int node = 0;
      for (auto it = words[w].parts.rbegin(); it != words[w].parts.rend(); ++it) {
        auto f = nodes[node].children.find(*it);
        if (f == nodes[node].children.end()) {
          nodes.emplace_back();
          const int id = static_cast<int>(nodes.size()) - 1;
          nodes[node].children.emplace(*it, id);
          node = id;
        } else {
          node = f->second;
        }
      }
      nodes[node].words.push_back(static_cast<int>(w));
    }
    if (any) trie_visit(nodes, 0, word_base(base), out);
  }
  return out;
}

SpanSolve solve_in_span(const State& target, const std::vector<State>& cols) {
  const int n = static_cast<int>(cols.size());
  SpanSolve res;
  // Rational path: split every (monomial, field coordinate) into its own row.
  std::unordered_map<Monomial, int, MonomialHash> mono_id;
  auto id_of = [&](const Monomial& m) {
    auto [it, ins] = mono_id.try_emplace(m, static_cast<int>(mono_id.size()));
    return it->second;
  };
  std::unordered_map<long, int> row_id;
  std::vector<SparseRowQ> rows;
  std::vector<Rational> rhs;
  auto row_of = [&](int mid, int basis) {
    const long key = static_cast<long>(mid) * 8 + basis;
    auto [it, ins] = row_id.try_emplace(key, static_cast<int>(rows.size()));
    if (ins) {
      rows.emplace_back();
      rhs.emplace_back(0);
    }
    return it->second;
  };
  for (int j = 0; j < n; ++j)
    for (const auto& [m, c] : cols[j].terms())
      for (const auto& co : c.coords()) rows[row_of(id_of(m), co.basis)].emplace_back(j, co.value);
  for (const auto& [m, c] : target.terms())
    for (const auto& co : c.coords()) rhs[row_of(id_of(m), co.basis)] = co.value;

  const RationalSolve rs = solve_rational(rows, rhs, n);
  res.rank = rs.rank;
  if (rs.x) {
    res.x.assign(rs.x->begin(), rs.x->end());
    res.residual = target;
    for (int j = 0; j < n; ++j) res.residual.axpy(-res.x[j], cols[j]);
    if (res.residual.is_zero()) return res;
  }
  // Fallback over K: Gauss-Jordan on [cols | target].
  SparseRref rref(n + 1);
  std::vector<SparseRow> krows(mono_id.size());
  for (int j = 0; j < n; ++j)
    for (const auto& [m, c] : cols[j].terms()) krows[mono_id.at(m)].emplace_back(j, c);
  for (const auto& [m, c] : target.terms()) krows[mono_id.at(m)].emplace_back(n, c);
  for (auto& r : krows) {
    std::sort(r.begin(), r.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    rref.add_row(std::move(r));
  }
  // Solution with free variables set to zero; a pivot in the target column means inconsistency.
  std::vector<Scalar> x(n);
  SparseRow probe;
  for (int pc : rref.pivot_columns()) {
    if (pc == n) continue;
    SparseRow unit{{pc, Scalar(1)}};
    // row of pivot pc: reduce(unit) = unit - row, so row = unit - reduce(unit)
    SparseRow red = rref.reduce(unit);
    SparseRow row = row_axpy(unit, Scalar(-1), red);
    for (const auto& [c, v] : row)
      if (c == n) x[pc] = v;
  }
  int rank = 0;
  for (int pc : rref.pivot_columns())
    if (pc < n) ++rank;
  res.rank = rank;
  res.x = x;
  res.residual = target;
  for (int j = 0; j < n; ++j) res.residual.axpy(-x[j], cols[j]);
  return res;
}

DecompositionResult decompose_over(const State& target, const std::vector<VirasoroWord>& words) {
  const std::vector<State> cols = apply_words(words);
  const SpanSolve s = solve_in_span(target, cols);
  DecompositionResult out;
  out.rank = s.rank;
  out.columns = static_cast<int>(words.size());
  out.residual = s.residual;
  for (std::size_t j = 0; j < words.size(); ++j) out.coefficients.emplace_back(words[j], s.x[j]);
  return out;
}

Scalar c_functional(const State& v) {
  if (v.is_zero()) return {};
  const Rational w = v.weight();
  if (w.get_den() != 1) throw GradingError("c functional needs integral weight");
  const int m = static_cast<int>(w.get_num().get_si());
  return v.coeff(Monomial::from_parts(std::vector<int>(m, 1)));
}

namespace {

std::optional<std::vector<Scalar>> solve_square(const std::vector<std::vector<Scalar>>& a,
                                                const std::vector<Scalar>& b) {
  const std::size_t n = a.size();
  bool rational = true;
  for (std::size_t i = 0; i < n && rational; ++i) {
    rational &= b[i].is_rational();
    for (std::size_t j = 0; j < n && rational; ++j) rational &= a[i][j].is_rational();
  }
  if (rational) {
    DenseMatrixQ aq(n, std::vector<Rational>(n));
    std::vector<Rational> bq(n);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) aq[i][j] = a[i][j].as_rational();
      bq[i] = b[i].as_rational();
    }
    auto x = bareiss_solve(std::move(aq), std::move(bq));
    if (!x) return std::nullopt;
    return std::vector<Scalar>(x->begin(), x->end());
  }
  std::vector<State> cols(n);
  State target;
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t i = 0; i < n; ++i) cols[j].add(Monomial::from_parts({static_cast<int>(i) + 1}), a[i][j]);
  for (std::size_t i = 0; i < n; ++i) target.add(Monomial::from_parts({static_cast<int>(i) + 1}), b[i]);
  SpanSolve s = solve_in_span(target, cols);
  if (s.rank < static_cast<int>(n) || !s.residual.is_zero()) return std::nullopt;
  return s.x;
}

}  // namespace

State build_u16() {
  const State& J = named_vector("J");
  const State& E = named_vector("E");
  State p = mode_apply(J, -9, J);
  p.axpy(Scalar(27), mode_apply(E, -9, E));
  const std::vector<VirasoroWord> words = vacuum_words(16, WordBase::Vacuum);
  const std::vector<State> ws = apply_words(words);
  const auto g = gram(ws);
  std::vector<Scalar> rhs;
  for (const auto& w : ws) rhs.push_back(pair(w, p));
  const auto c = solve_square(g, rhs);
  if (!c) throw std::logic_error("vacuum Gram matrix at weight 16 is singular");
  State u = p;
  for (std::size_t j = 0; j < ws.size(); ++j) u.axpy(-(*c)[j], ws[j]);
  if (!is_primary(u)) throw std::logic_error("u16 projection is not primary");
  if (lattice_component(u, 2) != named_vector("E2") * Scalar(27))
    throw std::logic_error("u16 lattice +-2 beta part is not 27 E2");
  if (zero_mode_exp(named_vector("hprime"), u) != u) throw std::logic_error("u16 is not sigma-invariant");
  return u;
}

std::optional<std::vector<Scalar>> SubspaceBasis::coordinates(const State& v) const {
  std::vector<Scalar> c(vectors.size());
  State rest = v;
  for (std::size_t i = 0; i < vectors.size(); ++i) {
    c[i] = v.coeff(leads[i]);
    rest.axpy(-c[i], vectors[i]);
  }
  if (!rest.is_zero()) return std::nullopt;
  return c;
}

SubspaceBasis fixed_subspace(const std::vector<Automorphism>& gens, const SectorId& sector,
                             const Rational& w) {
  const std::vector<Monomial> basis = graded_basis(sector, w);
  const int n = static_cast<int>(basis.size());
  std::unordered_map<Monomial, int, MonomialHash> index;
  for (int i = 0; i < n; ++i) index.emplace(basis[i], i);
  SparseRref rref(n);
  for (const auto& g : gens) {
    std::vector<SparseRow> rows(n);
    for (int j = 0; j < n; ++j) {
      State img = g(State(basis[j], Scalar(1)));
      img.add(basis[j], Scalar(-1));
      for (const auto& [m, c] : img.terms()) {
        auto it = index.find(m);
        if (it == index.end()) throw std::domain_error("automorphism leaves the graded piece");
        rows[it->second].emplace_back(j, c);
      }
    }
    for (auto& r : rows) {
      std::sort(r.begin(), r.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
      if (!r.empty()) rref.add_row(std::move(r));
    }
  }
  SubspaceBasis out;
  const auto pivots = rref.pivot_columns();
  for (const auto& vec : rref.kernel()) {
    State s;
    int lead = -1;
    for (const auto& [j, c] : vec) {
      s.add(basis[j], c);
      if (!std::binary_search(pivots.begin(), pivots.end(), j)) lead = j;
    }
    out.vectors.push_back(std::move(s));
    out.leads.push_back(basis[lead]);
  }
  return out;
}

SubspaceBasis eigen_subspace(const Automorphism& g, const Scalar& lambda, const SubspaceBasis& space) {
  const int n = static_cast<int>(space.size());
  std::vector<SparseRow> rows(n);
  for (int j = 0; j < n; ++j) {
    const auto coords = space.coordinates(g(space.vectors[j]));
    if (!coords) throw std::domain_error("map does not preserve the subspace");
    for (int i = 0; i < n; ++i) {
      Scalar v = (*coords)[i];
      if (i == j) v -= lambda;
      if (!v.is_zero()) rows[i].emplace_back(j, std::move(v));
    }
  }
  SparseRref rref(n);
  for (auto& r : rows)
    if (!r.empty()) rref.add_row(std::move(r));
  SubspaceBasis out;
  const auto pivots = rref.pivot_columns();
  for (const auto& vec : rref.kernel()) {
    State s;
    int lead = -1;
    for (const auto& [j, c] : vec) {
      s.axpy(c, space.vectors[j]);
      if (!std::binary_search(pivots.begin(), pivots.end(), j)) lead = j;
    }
    out.vectors.push_back(std::move(s));
    out.leads.push_back(space.leads[lead]);
  }
  return out;
}

}  // namespace voalab
