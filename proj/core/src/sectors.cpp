#include "voalab/sectors.hpp"

#include <cmath>
#include <mutex>
#include <regex>
#include <stdexcept>
#include <unordered_map>

#include "voalab/named.hpp"
#include "voalab/structure.hpp"
#include "voalab/twisted.hpp"
#include "voalab/vertex.hpp"

namespace voalab {

namespace {

// exp(+-2 pi i hprime_0) on monomials through g(h(-n)w) = (g h)_{-n} g(w), memoized.
class ZeroModeAutomorphism {
 public:
  explicit ZeroModeAutomorphism(int sign) : sign_(sign) {}

  State apply(const State& v) {
    State out;
    for (const auto& [m, c] : v.terms()) out.axpy(c, on_monomial(m));
    return out;
  }

 private:
  const State& hvec() {
    std::call_once(init_, [this] {
      hvec_ = named_vector("hprime") * Scalar(sign_);
      image_h_ = zero_mode_exp(hvec_, State(Monomial::from_parts({1}), Scalar(1)));
    });
    return hvec_;
  }

  State on_monomial(const Monomial& m) {
    const State& h = hvec();
    {
      std::lock_guard<std::mutex> lock(mu_);
      auto it = memo_.find(m);
      if (it != memo_.end()) return it->second;
    }
    State img;
    if (m.length() == 0) {
      img = zero_mode_exp(h, State(m, Scalar(1)));
    } else {
      Monomial rest = m;
      const int n = m.top();
      rest.add(n, -1);
      img = mode_apply(image_h_, -n, on_monomial(rest));
    }
    std::lock_guard<std::mutex> lock(mu_);
    return memo_.emplace(m, std::move(img)).first->second;
  }

  int sign_;
  std::once_flag init_;
  State hvec_, image_h_;
  std::mutex mu_;
  std::unordered_map<Monomial, State, MonomialHash> memo_;
};

ZeroModeAutomorphism& sigma_map(int sign) {
  static ZeroModeAutomorphism plus(1), minus(-1);
  return sign > 0 ? plus : minus;
}

}  // namespace

State sigma(const State& v) { return sigma_map(1).apply(v); }

State sigma_inverse(const State& v) { return sigma_map(-1).apply(v); }

// ---- characters ----

namespace {

QSeries signed_partition_series(int order) {
  // prod 1/(1 + q^k)
  QSeries r(order);
  r.at(0) = 1;
  for (int k = 1; k <= order; ++k)
    for (int n = k; n <= order; ++n) r.at(n) -= r[n - k];
  return r;
}

QSeries halved(const QSeries& s) {
  QSeries r = s;
  for (int n = 0; n <= r.order(); ++n) {
    if (r[n] % 2) throw std::logic_error("odd coefficient in a halved character");
    r.at(n) /= 2;
  }
  return r;
}

QSeries lattice_sum(int order, int step) {
  // sum over k in Z of q^{step k^2} / prod(1 - q^n)
  const QSeries p = partition_series(order);
  QSeries r(order);
  for (int k = 0; step * k * k <= order; ++k) {
    r += p.shifted(step * k * k);
    if (k) r += p.shifted(step * k * k);
  }
  return r;
}

QSeries coset_series(int r, int order) {
  r = ((r % 8) + 8) % 8;
  if (r == 0) return lattice_sum(order, 4);
  const Rational w0 = frac(r * r, 16);
  const Rational shift = w0 - Rational(w0.get_num() / w0.get_den());
  const QSeries p = partition_series(order);
  QSeries out(order, shift);
  for (int k = -order - 1; k <= order + 1; ++k) {
    const int q8 = r + 8 * k;
    const Rational n0 = frac(q8 * q8, 16) - shift;
    if (n0 > order) continue;
    QSeries s = p.shifted(static_cast<int>(n0.get_num().get_si()));
    for (int n = 0; n <= order; ++n) out.at(n) += s[n];
  }
  return out;
}

}  // namespace

long long sigma_fixed_dim_trace(int w) {
  const QSeries vplus = graded_dim("Vzb+", w);
  const QSeries p = partition_series(w);
  long long tr = 0;
  for (int m = -w; m <= w; ++m) {
    if (m * m > w) continue;
    tr += (m % 3 == 0 ? 2 : -1) * p[w - m * m];
  }
  const long long num = vplus[w] + tr;
  if (num % 3) throw std::logic_error("sigma trace formula gives a non-integral dimension");
  return num / 3;
}

QSeries graded_dim(const std::string& object, int order) {
  if (order < 0) throw std::invalid_argument("negative truncation order");
  const QSeries p = partition_series(order);
  std::smatch m;
  if (object == "M1") return p;
  if (object == "M1+") return halved(p + signed_partition_series(order));
  if (object == "M1-") return halved(p - signed_partition_series(order));
  static const std::regex lat(R"(M1\((\d+)\))");
  if (std::regex_match(object, m, lat)) {
    const int k = std::stoi(m[1]);
    if (k < 1) throw std::invalid_argument("M1(m) needs m >= 1");
    return p.shifted(4 * k * k);
  }
  if (object == "Vzb") return lattice_sum(order, 4);
  if (object == "Vzb+") return halved(lattice_sum(order, 4) + signed_partition_series(order));
  if (object == "Vzb-") return halved(lattice_sum(order, 4) - signed_partition_series(order));
  static const std::regex cos(R"(coset\((\d)\))");
  if (std::regex_match(object, m, cos)) return coset_series(std::stoi(m[1]), order);
  if (object == "VL2") return lattice_sum(order, 1);
  if (object == "VL2K") {
    QSeries r(order);
    const std::vector<Automorphism> k = {tau1, theta};
    for (int w = 0; w <= order; ++w)
      r.at(w) = static_cast<long long>(fixed_subspace(k, SectorId::full_l2(), w).size());
    return r;
  }
  if (object == "fixed" || object == "eigen1" || object == "eigen2") {
    QSeries fixed(order);
    for (int w = 0; w <= order; ++w) fixed.at(w) = sigma_fixed_dim_trace(w);
    if (object == "fixed") return fixed;
    return halved(graded_dim("Vzb+", order) - fixed);
  }
  throw std::invalid_argument("unknown character object '" + object + "'");
}

const std::vector<std::string>& char_object_examples() {
  static const std::vector<std::string> names = {"M1",    "M1+",  "M1-",      "M1(1)", "Vzb",
                                                 "Vzb+",  "Vzb-", "coset(1)", "VL2",   "VL2K",
                                                 "fixed", "eigen1", "eigen2"};
  return names;
}

FixedDecomposition verify_fixed_algebra_decomposition(int order) {
  FixedDecomposition out;
  QSeries rest = graded_dim("fixed", order);
  for (int w = 0; w <= order; ++w) {
    const long long c = rest[w];
    if (c == 0) continue;
    const int n = static_cast<int>(std::lround(std::sqrt(static_cast<double>(w))));
    if (n * n != w) {
      out.error = "nonzero remainder at non-square weight " + std::to_string(w);
      return out;
    }
    if (c < 0) {
      out.error = "negative multiplicity " + std::to_string(c) + " for L(1," + std::to_string(w) + ")";
      return out;
    }
    out.multiplicity[n] = c;
    rest -= char_L1(n, order).scaled(c);
  }
  for (int n = 0; n * n <= order; ++n) out.multiplicity.try_emplace(n, 0);
  out.ok = true;
  return out;
}

SigmaEigenDims sigma_eigen_dims(int w) {
  SigmaEigenDims d;
  d.weight = w;
  const SubspaceBasis space = fixed_subspace({tau1, theta}, SectorId::full_l2(), w);
  d.total = static_cast<int>(space.size());
  const Scalar z3 = Scalar::zeta3();
  d.d0 = static_cast<int>(eigen_subspace(sigma, Scalar(1), space).size());
  d.d1 = static_cast<int>(eigen_subspace(sigma, z3, space).size());
  d.d2 = static_cast<int>(eigen_subspace(sigma, z3 * z3, space).size());
  return d;
}

// ---- untwisted modules ----

namespace {

struct DisplayRow {
  const char* name;
  Rational omega, E, J;
};

const std::vector<DisplayRow>& display_rows() {
  static const std::vector<DisplayRow> rows = {
      {"VT1+", frac(1, 16), frac(1, 128), frac(3, 128)},
      {"VT1-", frac(9, 16), frac(-15, 128), frac(-45, 128)},
      {"VT2+", frac(1, 16), frac(-1, 128), frac(3, 128)},
      {"VT2-", frac(9, 16), frac(15, 128), frac(-45, 128)},
  };
  return rows;
}

bool proportional_to(const State& v, const State& img, Scalar& lambda) {
  if (img.is_zero()) {
    lambda = Scalar();
    return true;
  }
  const auto& [m0, c0] = *v.terms().begin();
  lambda = img.coeff(m0) / c0;
  return img == v * lambda;
}

}  // namespace

const std::vector<std::string>& vplus_module_names() {
  static const std::vector<std::string> names = {"V+",      "V-",      "V(b/8)", "V(b/4)", "V(3b/8)", "V(b/2)+",
                                                 "V(b/2)-", "VT1+",    "VT1-",   "VT2+",   "VT2-"};
  return names;
}

State module_top_vector(const std::string& module) {
  if (module == "V+") return State::vacuum();
  if (module == "V-") return State(Monomial::from_parts({1}), Scalar(1));
  if (module == "V(b/8)") return State::lattice(1);
  if (module == "V(b/4)") return State::lattice(2);
  if (module == "V(3b/8)") return State::lattice(3);
  if (module == "V(b/2)+") return State::lattice(4) + State::lattice(-4);
  if (module == "V(b/2)-") return State::lattice(4) - State::lattice(-4);
  throw std::invalid_argument("module '" + module + "' has no realized top vector");
}

Scalar top_level_eigenvalue(const std::string& u, const std::string& module) {
  const State v = module_top_vector(module);
  State img;
  if (u == "omega")
    img = virasoro(0, v);
  else if (u == "E" || u == "J")
    img = mode_apply(named_vector(u), 3, v);
  else
    throw std::invalid_argument("top-level eigenvalue needs u in {omega, E, J}");
  Scalar lambda;
  if (!proportional_to(v, img, lambda))
    throw NotEigenvector("o(" + u + ") maps the top of " + module + " to " + img.to_string());
  return lambda;
}

std::vector<TopLevelRow> vplus_module_table() {
  std::vector<TopLevelRow> rows;
  for (const auto& name : vplus_module_names()) {
    TopLevelRow r;
    r.module = name;
    bool displayed = false;
    for (const auto& d : display_rows()) {
      if (name != d.name) continue;
      r.display_only = true;
      r.omega = Scalar(d.omega);
      r.E = Scalar(d.E);
      r.J = Scalar(d.J);
      r.top_vector = "(theta-twisted, not realized)";
      displayed = true;
    }
    if (!displayed) {
      r.top_vector = module_top_vector(name).to_string();
      r.omega = top_level_eigenvalue("omega", name);
      r.E = top_level_eigenvalue("E", name);
      r.J = top_level_eigenvalue("J", name);
    }
    rows.push_back(std::move(r));
  }
  return rows;
}

SigmaOnJE sigma_inverse_on_JE() {
  const State& J = named_vector("J");
  const State& E = named_vector("E");
  const SpanSolve sj = solve_in_span(sigma_inverse(J), {J, E});
  const SpanSolve se = solve_in_span(sigma_inverse(E), {J, E});
  if (!sj.residual.is_zero() || !se.residual.is_zero())
    throw std::logic_error("sigma does not preserve span{J, E}");
  return {sj.x[0], sj.x[1], se.x[0], se.x[1]};
}

std::map<std::string, std::string> sigma_conjugate_pattern() {
  const auto rows = vplus_module_table();
  const SigmaOnJE s = sigma_inverse_on_JE();
  std::map<std::string, std::string> out;
  for (const auto& r : rows) {
    const Scalar e2 = s.ej * r.J + s.ee * r.E;
    const Scalar j2 = s.jj * r.J + s.je * r.E;
    std::string match = "none";
    for (const auto& c : rows)
      if (c.omega == r.omega && c.E == e2 && c.J == j2) match = c.module;
    out[r.module] = match;
  }
  return out;
}

// ---- twisted sectors ----

TwistedSector twisted_sector(int i, int j) {
  if ((i != 1 && i != 2) || (j != 1 && j != 2)) throw std::invalid_argument("twisted sector indices must be 1 or 2");
  TwistedSector t;
  t.i = i;
  t.j = j;
  t.hvec = j == 1 ? named_vector("hprime") : -named_vector("hprime");
  t.sector = i == 1 ? SectorId::full_l2() : SectorId::full_l2_half();
  return t;
}

namespace {

Rational sector_base(const TwistedSector& t) { return t.i == 1 ? Rational(0) : frac(1, 4); }

const Rational kShift = frac(1, 36);  // L^sigma(0) = L(0) + hvec(0) + 1/36

}  // namespace

Rational twisted_lowest_weight(const TwistedSector& t) {
  std::optional<Rational> best;
  for (Rational w = sector_base(t); w <= 2; w += 1)
    for (const auto& es : zero_mode_eigenspaces(t.hvec, t.sector, w)) {
      const Rational l = w + es.eigenvalue + kShift;
      if (!best || l < *best) best = l;
    }
  return *best;
}

std::vector<State> twisted_graded_piece(const TwistedSector& t, const Rational& n) {
  const Rational target = twisted_lowest_weight(t) + n;
  std::vector<State> out;
  for (Rational w = sector_base(t);; w += 1) {
    const double wd = w.get_d();
    if (wd - std::sqrt(wd) / 3.0 > Rational(target - kShift).get_d() + 1e-9) break;
    const Rational lambda = target - kShift - w;
    for (const auto& es : zero_mode_eigenspaces(t.hvec, t.sector, w)) {
      if (es.eigenvalue != lambda) continue;
      for (const auto& v : es.basis) {
        if (twisted_l0(v, t.hvec) != v * Scalar(target))
          throw std::logic_error("twisted L(0) disagrees with the eigenspace bookkeeping");
        out.push_back(v);
      }
    }
  }
  return out;
}

std::vector<TwistedTop> twisted_top_vectors() {
  const State& y1 = named_vector("y1");
  const State& y2 = named_vector("y2");
  const State& w1 = named_vector("w1");
  const State& w2 = named_vector("w2");
  const State one = State::vacuum();
  struct Spec {
    const char* label;
    int j;
    State vec;
  };
  const std::vector<Spec> specs = {
      {"W1T1-1", 1, one}, {"W1T1-2", 1, y2}, {"W1T1-3", 1, y1},
      {"W2T1-1", 1, w2},  {"W2T1-2", 1, w1}, {"W2T1-3", 1, mode_apply(y2, -2, w2)},
      {"W1T2-1", 2, one}, {"W1T2-2", 2, y1}, {"W1T2-3", 2, y2},
      {"W2T2-1", 2, w1},  {"W2T2-2", 2, w2}, {"W2T2-3", 2, mode_apply(y1, -2, w1)},
  };
  std::vector<TwistedTop> out;
  for (const auto& s : specs) {
    const State hvec = s.j == 1 ? named_vector("hprime") : -named_vector("hprime");
    Scalar lambda;
    if (!proportional_to(s.vec, twisted_l0(s.vec, hvec), lambda) || !lambda.is_rational())
      throw NotEigenvector(std::string(s.label) + " is not a twisted L(0) eigenvector");
    out.push_back({s.label, s.vec, lambda.as_rational()});
  }
  return out;
}

// ---- quarter module ----

QuarterModule decompose_quarter_module() {
  QuarterModule q;
  q.top = State::lattice(2) + State::lattice(-2);
  q.top_weight = q.top.weight();
  auto even = [](const State& v) { return (v + theta(v)) * Scalar(frac(1, 2)); };
  const State img = even(sigma(q.top));
  Scalar mu;
  if (!proportional_to(q.top, img, mu) || mu.is_zero())
    throw NotEigenvector("sigma does not preserve the top of the quarter module");
  const Scalar inv_mu = mu.inverse();
  const Automorphism phi = [&](const State& v) { return even(sigma(v)) * inv_mu; };

  const SubspaceBasis top_space = fixed_subspace({theta}, SectorId::full_l2_half(), frac(1, 4));
  q.dim_top = static_cast<int>(top_space.size());
  const SubspaceBasis space = fixed_subspace({theta}, SectorId::full_l2_half(), frac(9, 4));
  q.dim_94 = static_cast<int>(space.size());
  q.weights.push_back(q.top_weight);
  q.eigenvalues.push_back(Scalar(1));

  const Scalar z3 = Scalar::zeta3();
  const Monomial lead = Monomial::from_parts({2}, 2);
  bool ok = true;
  for (const Scalar& lambda : {z3, z3 * z3}) {
    const SubspaceBasis es = eigen_subspace(phi, lambda, space);
    if (es.size() != 1) {
      ok = false;
      continue;
    }
    State g = es.vectors[0];
    const Scalar c = g.coeff(lead);
    if (c.is_zero()) {
      ok = false;
      continue;
    }
    g *= c.inverse();
    q.generators.push_back(g);
    q.eigenvalues.push_back(lambda);
    q.weights.push_back(g.weight());
  }
  if (ok && q.generators.size() == 2) {
    const Scalar r2 = Scalar::sqrt2();
    const Scalar a1 = q.generators[0].coeff(Monomial(6));
    const Scalar a2 = q.generators[1].coeff(Monomial(6));
    q.a = a1;
    for (std::size_t k = 0; k < 2; ++k) {
      const State& g = q.generators[k];
      const Scalar a = k == 0 ? a1 : a2;
      State shape = State(Monomial::from_parts({2}, 2), Scalar(1)) - State(Monomial::from_parts({2}, -2), Scalar(1));
      shape -= (State(Monomial::from_parts({1, 1}, 2), Scalar(1)) + State(Monomial::from_parts({1, 1}, -2), Scalar(1))) * r2;
      shape += (State::lattice(6) + State::lattice(-6)) * a;
      ok = ok && g == shape;
    }
    ok = ok && !a1.is_zero() && a2 == -a1;
  } else {
    ok = false;
  }
  q.shape_ok = ok;
  return q;
}

// ---- classification table ----

std::vector<ModuleDescriptor> module_catalog() {
  std::vector<ModuleDescriptor> out;
  auto add = [&](std::string name, std::string real, Rational lw, Rational expected) {
    ModuleDescriptor d{std::move(name), std::move(real), lw, expected, lw == expected};
    out.push_back(std::move(d));
  };
  // sigma-eigenspaces of Vzb+: lowest weight carrying each eigenvalue.
  int low[3] = {-1, -1, -1};
  for (int w = 0; w <= 4; ++w) {
    const SigmaEigenDims d = sigma_eigen_dims(w);
    const int dims[3] = {d.d0, d.d1, d.d2};
    for (int r = 0; r < 3; ++r)
      if (low[r] < 0 && dims[r] > 0) low[r] = w;
  }
  add("(V+)^0", "sigma-fixed part of Vzb+, generated by 1", low[0], 0);
  add("(V+)^1", "zeta3-eigenspace of Vzb+, generated by X1", low[1], 4);
  add("(V+)^2", "zeta3^2-eigenspace of Vzb+, generated by X2", low[2], 4);
  add("V-", "Vzb-, top h(-1)1", top_level_eigenvalue("omega", "V-").as_rational(), 1);
  add("V(b/8)", "V_{Zb+b/8}, top e^{b/8}", top_level_eigenvalue("omega", "V(b/8)").as_rational(), frac(1, 16));
  add("V(3b/8)", "V_{Zb+3b/8}, top e^{3b/8}", top_level_eigenvalue("omega", "V(3b/8)").as_rational(),
      frac(9, 16));
  const Rational twelve[12] = {frac(1, 36), frac(25, 36), frac(49, 36), frac(1, 9), frac(4, 9), frac(16, 9),
                               frac(1, 36), frac(25, 36), frac(49, 36), frac(1, 9), frac(4, 9), frac(16, 9)};
  const auto tops = twisted_top_vectors();
  for (std::size_t k = 0; k < tops.size(); ++k)
    add(tops[k].label, "twisted, generated by " + tops[k].vec.to_string(), tops[k].weight, twelve[k]);
  const QuarterModule q = decompose_quarter_module();
  const Rational qw[3] = {frac(1, 4), frac(9, 4), frac(9, 4)};
  for (std::size_t k = 0; k < 3; ++k) {
    const Rational w = k < q.weights.size() ? q.weights[k] : Rational(-1);
    add("(V(b/4))^" + std::to_string(k), "eigenspace of sigma on V_{Zb+b/4}", w, qw[k]);
  }
  return out;
}

}  // namespace voalab
