#include "voalab/checks.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <map>
#include <mutex>
#include <optional>
#include <set>
#include <stdexcept>
#include <thread>

#include "voalab/named.hpp"
#include "voalab/properties.hpp"
#include "voalab/qseries.hpp"
#include "voalab/sectors.hpp"
#include "voalab/structure.hpp"
#include "voalab/twisted.hpp"
#include "voalab/vertex.hpp"

namespace voalab {

const char* tool_version() { return "1.0.0"; }

std::string status_name(Status s) {
  switch (s) {
    case Status::Pass: return "pass";
    case Status::Fail: return "fail";
    case Status::Finding: return "finding";
  }
  return "fail";
}

namespace {

template <class T>
class Lazy {
 public:
  const T& get(const std::function<T()>& make) {
    std::call_once(once_, [&] { value_.emplace(make()); });
    return *value_;
  }

 private:
  std::once_flag once_;
  std::optional<T> value_;
};

}  // namespace

// Shared intermediate results, computed once per run.
class Workbench {
 public:
  explicit Workbench(Config c) : config(c) {}
  const Config config;

  struct Decomposition {
    int weight = 0;
    State target;
    std::vector<VirasoroWord> words;
    SpanSolve solve;
    Scalar c;
    Scalar coefficient(const std::vector<int>& parts, WordBase base) const {
      for (std::size_t j = 0; j < words.size(); ++j)
        if (words[j].parts == parts && words[j].base == base) return solve.x[j];
      throw std::logic_error("word not in the decomposition");
    }
  };

  const Decomposition& decomposition(int n) {
    auto make = [n] {
      Decomposition d;
      const State& u9 = named_vector("u9");
      d.target = mode_apply(u9, n, u9);
      d.weight = 17 - n;
      d.words = vacuum_words(d.weight, WordBase::Vacuum);
      const auto w16 = vacuum_words(d.weight, WordBase::U16);
      d.words.insert(d.words.end(), w16.begin(), w16.end());
      d.solve = solve_in_span(d.target, apply_words(d.words));
      d.c = c_functional(d.target);
      return d;
    };
    return n == -3 ? dec20_.get(make) : dec22_.get(make);
  }

  const State& commutator9() {
    return comm_.get([] {
      const State& J = named_vector("J");
      const State& E = named_vector("E");
      return mode_apply(J, -2, E) - mode_apply(E, -2, J);
    });
  }

  const std::vector<TopLevelRow>& vplus_table() { return table_.get([] { return vplus_module_table(); }); }
  const QuarterModule& quarter() { return quarter_.get([] { return decompose_quarter_module(); }); }
  const std::vector<ModuleDescriptor>& catalog() { return catalog_.get([] { return module_catalog(); }); }
  const FixedDecomposition& fixed_decomposition() {
    return fixed_.get([this] { return verify_fixed_algebra_decomposition(std::min(config.max_weight, 36)); });
  }

 private:
  Lazy<Decomposition> dec20_, dec22_;
  Lazy<State> comm_;
  Lazy<std::vector<TopLevelRow>> table_;
  Lazy<QuarterModule> quarter_;
  Lazy<std::vector<ModuleDescriptor>> catalog_;
  Lazy<FixedDecomposition> fixed_;
};

namespace {

const State& nv(const char* name) { return named_vector(name); }
Scalar q(long n, long d = 1) { return Scalar(frac(n, d)); }

CheckOutcome outcome(bool ok, std::string computed, std::string expected, std::string note = "") {
  return {ok ? Status::Pass : Status::Fail, std::move(computed), std::move(expected), std::move(note)};
}

CheckOutcome same_state(const State& got, const State& want) {
  return outcome(got == want, got.to_string(), want.to_string());
}

CheckOutcome same_scalar(const Scalar& got, const Scalar& want) {
  return outcome(got == want, got.to_string(), want.to_string());
}

// Combine several sub-checks into one outcome.
struct Multi {
  bool ok = true;
  std::string computed, expected;
  void add(const std::string& label, bool good, const std::string& got, const std::string& want) {
    ok = ok && good;
    if (!computed.empty()) {
      computed += "; ";
      expected += "; ";
    }
    computed += label + " = " + got;
    expected += label + " = " + want;
  }
  void state(const std::string& label, const State& got, const State& want) {
    add(label, got == want, got.to_string(), want.to_string());
  }
  void scalar(const std::string& label, const Scalar& got, const Scalar& want) {
    add(label, got == want, got.to_string(), want.to_string());
  }
  void rational(const std::string& label, const Rational& got, const Rational& want) {
    add(label, got == want, got.get_str(), want.get_str());
  }
  void integer(const std::string& label, long long got, long long want) {
    add(label, got == want, std::to_string(got), std::to_string(want));
  }
  CheckOutcome done(std::string note = "") const { return outcome(ok, computed, expected, std::move(note)); }
};

CheckOutcome property_outcome(const PropertyResult& r) {
  return outcome(r.ok, std::to_string(r.cases) + " cases" + (r.ok ? " hold" : ", counterexample: " + r.detail),
                 std::to_string(r.cases) + " cases hold");
}

State word(const std::vector<int>& parts, const State& base) { return apply_word(parts, base); }

std::string join(const std::vector<std::string>& xs) {
  std::string out;
  for (const auto& x : xs) out += (out.empty() ? "" : ", ") + x;
  return out;
}

// Is v (nonzero) proportional to some vector of the one-element basis?
bool spans_line(const std::vector<State>& basis, const State& v) {
  if (basis.size() != 1 || v.is_zero()) return false;
  const auto& [m, c] = *v.terms().begin();
  const Scalar b = basis[0].coeff(m);
  if (b.is_zero()) return false;
  return basis[0] * (c / b) == v;
}

std::vector<CheckSpec> build_registry() {
  std::vector<CheckSpec> r;
  auto add = [&](std::string id, std::string desc, std::vector<std::string> topics, int crit, bool heavy,
                 std::function<CheckOutcome(Workbench&)> fn) {
    r.push_back({std::move(id), std::move(desc), std::move(topics), crit, heavy, std::move(fn)});
  };

  // ---- mode products of the weight-4 primaries ----
  struct ModeRow {
    const char* id;
    const char* u;
    int n;
    const char* v;
    std::function<State()> expected;
  };
  const std::vector<ModeRow> rows = {
      {"E3E", "E", 3, "E", [] { return nv("u0") + nv("J") * q(20, 9); }},
      {"J3J", "J", 3, "J", [] { return nv("u0") * q(27) - nv("J") * q(60); }},
      {"J3E", "J", 3, "E", [] { return nv("E") * q(60); }},
      {"E2E", "E", 2, "E", [] { return nv("u1") + virasoro(-1, nv("J")) * q(10, 9); }},
      {"J2J", "J", 2, "J", [] { return nv("u1") * q(27) - virasoro(-1, nv("J")) * q(30); }},
      {"J2E", "J", 2, "E", [] { return virasoro(-1, nv("E")) * q(30); }},
      {"E1E", "E", 1, "E", [] { return nv("u2") + nv("v2") * q(20, 9); }},
      {"J1J", "J", 1, "J", [] { return nv("u2") * q(27) - nv("v2") * q(60); }},
      {"J1E", "J", 1, "E", [] { return nv("v4") * q(60); }},
      {"E0E", "E", 0, "E", [] { return nv("u3") + nv("v3") * q(20, 9); }},
      {"J0J", "J", 0, "J", [] { return nv("u3") * q(27) - nv("v3") * q(60); }},
      {"J0E", "J", 0, "E", [] { return nv("v5") * q(60); }},
  };
  for (const auto& row : rows) {
    add(std::string("mode-product-") + row.id,
        std::string(row.u) + "_" + std::to_string(row.n) + row.v + " in terms of u0..u3, v2..v5",
        {"mode-products", "named-vectors", "lattice-construction"}, 1, false, [row](Workbench&) {
          return same_state(mode_apply(nv(row.u), row.n, nv(row.v)), row.expected());
        });
  }
  add("mode-product-J3J-virasoro-form", "J_3J = -72 L(-4)1 + 336 L(-2)^2 1 - 60 J", {"mode-products"}, 1, false,
      [](Workbench&) {
        const State one = State::vacuum();
        return same_state(mode_apply(nv("J"), 3, nv("J")),
                          word({4}, one) * q(-72) + word({2, 2}, one) * q(336) - nv("J") * q(60));
      });

  // ---- sigma ----
  add("sigma-on-J", "sigma(J) = -1/2 J + 9/2 E", {"sigma-action"}, 2, false,
      [](Workbench&) { return same_state(sigma(nv("J")), nv("J") * q(-1, 2) + nv("E") * q(9, 2)); });
  add("sigma-on-E", "sigma(E) = -1/6 J - 1/2 E", {"sigma-action"}, 2, false,
      [](Workbench&) { return same_state(sigma(nv("E")), nv("J") * q(-1, 6) - nv("E") * q(1, 2)); });
  add("sigma-on-X1", "sigma(X1) = zeta3 X1", {"sigma-action", "sigma-eigenspaces"}, 2, false,
      [](Workbench&) { return same_state(sigma(nv("X1")), nv("X1") * Scalar::zeta3()); });
  add("sigma-on-X2", "sigma(X2) = zeta3^2 X2", {"sigma-action", "sigma-eigenspaces"}, 2, false,
      [](Workbench&) { return same_state(sigma(nv("X2")), nv("X2") * Scalar::zeta3().conj_i()); });
  add("sigma-order-three", "sigma^3 = id on every basis monomial of V_L2 up to weight 8", {"sigma-action"}, 2,
      false, [](Workbench&) { return property_outcome(sigma_order_three_property(8)); });
  add("sigma-on-sl2-basis", "sigma(x1, x2, x3) = (-x3, x1, -x2)", {"automorphisms", "sigma-action"}, 2, false,
      [](Workbench&) {
        Multi m;
        m.state("sigma(x1)", sigma(nv("x1")), -nv("x3"));
        m.state("sigma(x2)", sigma(nv("x2")), nv("x1"));
        m.state("sigma(x3)", sigma(nv("x3")), -nv("x2"));
        return m.done();
      });
  add("involutions-on-sl2-basis", "tau1 = diag(1,-1,-1) and theta = diag(-1,1,-1) on (x1, x2, x3)",
      {"automorphisms", "theta-involution"}, 2, false, [](Workbench&) {
        Multi m;
        m.state("tau1(x1)", tau1(nv("x1")), nv("x1"));
        m.state("tau1(x2)", tau1(nv("x2")), -nv("x2"));
        m.state("tau1(x3)", tau1(nv("x3")), -nv("x3"));
        m.state("theta(x1)", theta(nv("x1")), -nv("x1"));
        m.state("theta(x2)", theta(nv("x2")), nv("x2"));
        m.state("theta(x3)", theta(nv("x3")), -nv("x3"));
        m.state("theta(F)", theta(nv("F")), -nv("F"));
        return m.done();
      });
  add("sigma-on-hprime-and-y", "sigma fixes hprime, scales y1 by zeta3 and y2 by zeta3^2", {"sigma-action"}, 2,
      false, [](Workbench&) {
        Multi m;
        m.state("sigma(hprime)", sigma(nv("hprime")), nv("hprime"));
        m.state("sigma(y1)", sigma(nv("y1")), nv("y1") * Scalar::zeta3());
        m.state("sigma(y2)", sigma(nv("y2")), nv("y2") * Scalar::zeta3().conj_i());
        return m.done();
      });
  add("sigma-fixes-X1-X2-products", "X1_n X2 is sigma-fixed for n = 0..7", {"sigma-action"}, 2, false,
      [](Workbench&) {
        Multi m;
        for (int n = 0; n <= 7; ++n) {
          const State p = mode_apply(nv("X1"), n, nv("X2"));
          m.add("n=" + std::to_string(n), sigma(p) == p, sigma(p) == p ? "fixed" : "moved", "fixed");
        }
        return m.done();
      });

  // ---- weight-9 primary and the form ----
  add("u9-primary", "u9 is a nonzero primary vector of weight 9", {"weight9-primary", "named-vectors"}, 3, false,
      [](Workbench&) {
        Multi m;
        m.rational("weight", nv("u9").weight(), 9);
        m.add("primary", is_primary(nv("u9")), is_primary(nv("u9")) ? "true" : "false", "true");
        return m.done();
      });
  add("commutator-primary", "J_{-2}E - E_{-2}J is a nonzero primary vector of weight 9", {"weight9-primary"}, 3,
      false, [](Workbench& wb) {
        Multi m;
        m.rational("weight", wb.commutator9().weight(), 9);
        m.add("primary", is_primary(wb.commutator9()), is_primary(wb.commutator9()) ? "true" : "false", "true");
        m.state("sigma-fixed", sigma(wb.commutator9()), wb.commutator9());
        m.state("lattice support +-b", lattice_component(wb.commutator9(), 1), wb.commutator9());
        return m.done();
      });
  add("commutator-mode8-on-J-E", "(J_{-2}E - E_{-2}J)_8 J = -10800 E and _8 E = 400 J", {"weight9-primary"}, 3,
      false, [](Workbench& wb) {
        Multi m;
        m.state("on J", mode_apply(wb.commutator9(), 8, nv("J")), nv("E") * q(-10800));
        m.state("on E", mode_apply(wb.commutator9(), 8, nv("E")), nv("J") * q(400));
        return m.done();
      });
  add("commutator-mode8-on-X", "(J_{-2}E - E_{-2}J)_8 X1 = -400 sqrt27 i X1, on X2 = +400 sqrt27 i X2",
      {"weight9-primary", "sigma-eigenspaces"}, 3, false, [](Workbench& wb) {
        const Scalar c = Scalar(400) * Scalar(3) * Scalar::sqrt3() * Scalar::i();
        Multi m;
        m.state("on X1", mode_apply(wb.commutator9(), 8, nv("X1")), nv("X1") * (-c));
        m.state("on X2", mode_apply(wb.commutator9(), 8, nv("X2")), nv("X2") * c);
        return m.done();
      });
  add("u9-mode8-on-E", "u9_8 E = -100 sqrt2 J", {"weight9-primary"}, 3, false,
      [](Workbench&) { return same_state(mode_apply(nv("u9"), 8, nv("E")), nv("J") * (Scalar(-100) * Scalar::sqrt2())); });
  add("commutator-equals-u9-multiple", "J_{-2}E - E_{-2}J = -2 sqrt2 u9", {"weight9-primary", "named-vectors"}, 3,
      false, [](Workbench& wb) {
        const SpanSolve s = solve_in_span(wb.commutator9(), {nv("u9")});
        Multi m;
        m.add("residual", s.residual.is_zero(), s.residual.is_zero() ? "0" : s.residual.to_string(), "0");
        m.scalar("ratio", s.x[0], Scalar(-2) * Scalar::sqrt2());
        return m.done();
      });
  add("u9-norm", "(u9, u9) = 5400", {"bilinear-form", "weight9-primary"}, 3, false,
      [](Workbench&) { return same_scalar(pair(nv("u9"), nv("u9")), Scalar(5400)); });
  add("form-on-E-and-J", "(E,E) = 2, (J,J) = 54, (J,E) = 0, Gram of {E,F} = diag(2,-2)", {"bilinear-form"}, 3, false,
      [](Workbench&) {
        Multi m;
        m.scalar("(E,E)", pair(nv("E"), nv("E")), Scalar(2));
        m.scalar("(J,J)", pair(nv("J"), nv("J")), Scalar(54));
        m.scalar("(J,E)", pair(nv("J"), nv("E")), Scalar(0));
        m.scalar("(F,F)", pair(nv("F"), nv("F")), Scalar(-2));
        m.scalar("(E,F)", pair(nv("E"), nv("F")), Scalar(0));
        return m.done();
      });
  add("commutator-norm", "(J_{-2}E - E_{-2}J, J_{-2}E - E_{-2}J) = 43200", {"bilinear-form", "weight9-primary"}, 3,
      false, [](Workbench& wb) { return same_scalar(pair(wb.commutator9(), wb.commutator9()), Scalar(43200)); });

  // ---- weight 16 ----
  add("u16-primary", "u16 is primary of weight 16", {"u16-extraction"}, 4, true, [](Workbench&) {
    Multi m;
    m.rational("weight", nv("u16").weight(), 16);
    m.add("primary", is_primary(nv("u16")), is_primary(nv("u16")) ? "true" : "false", "true");
    return m.done();
  });
  add("u16-lattice-part", "the +-2b part of u16 is 27 (e^{2b} + e^{-2b})", {"u16-extraction"}, 4, true,
      [](Workbench&) { return same_state(lattice_component(nv("u16"), 2), nv("E2") * q(27)); });
  add("u16-sigma-invariant", "sigma(u16) = u16", {"u16-extraction", "sigma-action"}, 4, true,
      [](Workbench&) { return same_state(sigma(nv("u16")), nv("u16")); });
  add("u16-orthogonal-projection", "J_{-9}J + 27 E_{-9}E - u16 lies in the vacuum module", {"u16-extraction"}, 4,
      true, [](Workbench&) {
        State p = mode_apply(nv("J"), -9, nv("J"));
        p.axpy(q(27), mode_apply(nv("E"), -9, nv("E")));
        p -= nv("u16");
        const DecompositionResult d = decompose_over(p, vacuum_words(16, WordBase::Vacuum));
        return outcome(d.residual.is_zero(), d.residual.is_zero() ? "residual 0" : d.residual.to_string(),
                       "residual 0");
      });
  add("u9-u9-weight16-membership", "u9_1 u9 - 58800 u16 has zero residual against the weight-16 vacuum words",
      {"weight16-membership"}, 4, true, [](Workbench&) {
        State t = mode_apply(nv("u9"), 1, nv("u9"));
        t.axpy(q(-58800), nv("u16"));
        const DecompositionResult d = decompose_over(t, vacuum_words(16, WordBase::Vacuum));
        Multi m;
        m.add("residual", d.residual.is_zero(), d.residual.is_zero() ? "0" : d.residual.to_string(), "0");
        m.integer("rank", d.rank, static_cast<long long>(d.columns));
        return m.done();
      });
  add("u9-u9-lattice-coefficient", "(u9_1 u9, E2) = 1587600 (E2, E2), with monomial contributions 972 and 304",
      {"weight16-membership"}, 4, false, [](Workbench&) {
        Multi m;
        const State t = mode_apply(nv("u9"), 1, nv("u9"));
        m.state("+-2b part", lattice_component(t, 2), nv("E2") * q(1587600));
        const State a = State(Monomial::from_parts({4, 1}, 8), Scalar(1)) + State(Monomial::from_parts({4, 1}, -8), Scalar(1));
        const State b = State(Monomial::from_parts({3, 2}, 8), Scalar(1)) + State(Monomial::from_parts({3, 2}, -8), Scalar(1));
        const State c = State(Monomial::from_parts({2, 1, 1, 1}, 8), Scalar(1)) +
                        State(Monomial::from_parts({2, 1, 1, 1}, -8), Scalar(1));
        m.state("(h(-4)h(-1)E)_1(h(-4)h(-1)E) +-2b part", lattice_component(mode_apply(a, 1, a), 2),
                nv("E2") * q(972));
        m.state("(h(-3)h(-2)E)_1(h(-2)h(-1)^3E) +-2b part", lattice_component(mode_apply(b, 1, c), 2),
                nv("E2") * q(304));
        return m.done();
      });

  // ---- weight 20 and 22 ----
  add("weight20-u16-coefficients", "u9_{-3}u9: coefficients of the five u16 words", {"weight20-22-decomposition"}, 5,
      true, [](Workbench& wb) {
        const auto& d = wb.decomposition(-3);
        Multi m;
        m.add("residual", d.solve.residual.is_zero(), d.solve.residual.is_zero() ? "0" : "nonzero", "0");
        const std::vector<std::pair<std::vector<int>, Rational>> want = {{{4}, frac(162770, 99)},
                                                                         {{3, 1}, frac(5204015, 1584)},
                                                                         {{2, 2}, frac(14760, 11)},
                                                                         {{2, 1, 1}, frac(1154225, 792)},
                                                                         {{1, 1, 1, 1}, frac(354895, 3168)}};
        for (const auto& [parts, value] : want) {
          const VirasoroWord w{parts, WordBase::U16};
          m.scalar(w.to_string(), d.coefficient(parts, WordBase::U16), Scalar(value));
        }
        return m.done();
      });
  add("weight22-u16-coefficients", "u9_{-5}u9: coefficients of the eleven u16 words", {"weight20-22-decomposition"},
      5, true, [](Workbench& wb) {
        const auto& d = wb.decomposition(-5);
        Multi m;
        m.add("residual", d.solve.residual.is_zero(), d.solve.residual.is_zero() ? "0" : "nonzero", "0");
        const long k = 27;
        const std::vector<std::pair<std::vector<int>, Rational>> want = {
            {{6}, frac(-653871670, 63063 * k)},
            {{5, 1}, frac(3303230375L, 2018016 * k)},
            {{4, 2}, frac(489993820, 63063 * k)},
            {{3, 3}, frac(69658220, 9009 * k)},
            {{4, 1, 1}, frac(346772585, 42042 * k)},
            {{3, 2, 1}, frac(3338006885L, 168168 * k)},
            {{2, 2, 2}, frac(19408720, 7007 * k)},
            {{3, 1, 1, 1}, frac(14067649205L, 4036032 * k)},
            {{2, 2, 1, 1}, frac(1055175305, 252252 * k)},
            {{2, 1, 1, 1, 1}, frac(1185150565, 2018016 * k)},
            {{1, 1, 1, 1, 1, 1}, frac(119070745, 8072064 * k)}};
        for (const auto& [parts, value] : want) {
          const VirasoroWord w{parts, WordBase::U16};
          m.scalar(w.to_string(), d.coefficient(parts, WordBase::U16), Scalar(value));
        }
        return m.done();
      });
  add("word-independence", "the word sets at weights 20 and 22 have full column rank", {"weight20-22-decomposition"},
      5, true, [](Workbench& wb) {
        Multi m;
        for (int n : {-3, -5}) {
          const auto& d = wb.decomposition(n);
          m.integer("rank at weight " + std::to_string(d.weight), d.solve.rank,
                    static_cast<long long>(d.words.size()));
        }
        return m.done();
      });
  add("vacuum-word-counts", "numbers of vacuum and u16 words at weights 20 and 22", {"weight20-22-decomposition"}, 5,
      false, [](Workbench&) {
        Multi m;
        for (int w : {16, 20, 22}) {
          const QSeries p = partition_series(w);
          m.integer("vacuum words at " + std::to_string(w), static_cast<long long>(vacuum_words(w, WordBase::Vacuum).size()),
                    p[w] - p[w - 1]);
        }
        m.integer("u16 words at 20", static_cast<long long>(vacuum_words(20, WordBase::U16).size()), 5);
        m.integer("u16 words at 22", static_cast<long long>(vacuum_words(22, WordBase::U16).size()), 11);
        return m.done();
      });
  add("gram-system", "Gram matrix and right side of the weight-20 u16 system match the reference values up to one scalar",
      {"gram-system"}, 5, true, [](Workbench& wb) {
        const std::vector<std::vector<Rational>> shown = {
            {133, 224, 387, 576, 1920},
            {224, 3328, 480, 10560, 49920},
            {387, 480, frac(17673, 2), 13152, 57600},
            {576, 10560, 13152, 162336, 1267200},
            {1920, 49920, 57600, 1267200, 30159360}};
        std::vector<Rational> rhs_shown;
        for (long v : {43L, 560L, 675L, 7344L, 93024L}) rhs_shown.push_back(Rational(58800 * v));
        const auto words = vacuum_words(20, WordBase::U16);
        const auto states = apply_words(words);
        const auto g = gram(states);
        const State& target = wb.decomposition(-3).target;
        const Scalar kappa = g[0][0] / Scalar(shown[0][0]);
        bool ok = true;
        std::string got;
        for (std::size_t i = 0; i < 5; ++i) {
          for (std::size_t j = 0; j < 5; ++j) {
            const Scalar want = kappa * Scalar(shown[i][j]);
            ok = ok && g[i][j] == want;
            got += (j ? " " : (i ? " | " : "")) + (g[i][j] / kappa).to_string();
          }
        }
        std::string rhs_got;
        for (std::size_t i = 0; i < 5; ++i) {
          const Scalar r = pair(target, states[i]);
          ok = ok && r == kappa * Scalar(rhs_shown[i]);
          rhs_got += (i ? " " : "") + (r / kappa).to_string();
        }
        return outcome(ok, "scale " + kappa.to_string() + "; matrix/scale " + got + "; rhs/scale " + rhs_got,
                       "one common scale; matrix 133 224 387 576 1920 | ... ; rhs 58800*(43 560 675 7344 93024)",
                       "scale = (u16, u16) normalization");
      });

  // ---- coefficient functional ----
  auto c_check = [](int n, const Rational& reference) {
    return [n, reference](Workbench& wb) {
      const auto& d20 = wb.decomposition(-3);
      const auto& d22 = wb.decomposition(-5);
      const Scalar got = wb.decomposition(n).c;
      if (got == Scalar(reference)) return outcome(true, got.to_string(), reference.get_str());
      // A mismatch is a finding when the computed value satisfies the reference ratio.
      const Scalar lhs = (d20.c * q(1, 2)) / d22.c;
      const bool certified = lhs == q(32688117, 2563276);
      CheckOutcome o = outcome(false, got.to_string(), reference.get_str());
      if (certified) {
        o.status = Status::Finding;
        o.note = "computed value reproduces the reference ratio 32688117/2563276; reference value differs by a factor " +
                 (got / Scalar(reference)).to_string();
      }
      return o;
    };
  };
  add("c-weight20", "c(u9_{-3}u9) = -447232/(19*17*11*7^2*5^2*3)", {"coefficient-functional"}, 6, true,
      c_check(-3, frac(-447232, 19L * 17 * 11 * 49 * 25 * 3)));
  add("c-weight22", "c(u9_{-5}u9) = -328099328/(19*17*13*11^2*7^3*5^2*3^6)", {"coefficient-functional"}, 6, true,
      c_check(-5, Rational(-328099328) / Rational(Integer(19L * 17 * 13 * 121 * 343) * 25 * 729)));
  add("c-consistency", "c(u9_{-3}u9) = a1/2^10 + (1/4)(14760/11)c(X16) and the weight-22 analogue",
      {"coefficient-functional"}, 6, true, [](Workbench& wb) {
        const auto& d20 = wb.decomposition(-3);
        const auto& d22 = wb.decomposition(-5);
        const Scalar cx = c_functional(nv("u16"));
        const Scalar a1 = d20.coefficient(std::vector<int>(10, 2), WordBase::Vacuum);
        const Scalar a2 = d22.coefficient(std::vector<int>(11, 2), WordBase::Vacuum);
        const Scalar b1 = d20.coefficient({2, 2}, WordBase::U16);
        const Scalar b2 = d22.coefficient({2, 2, 2}, WordBase::U16);
        Multi m;
        m.scalar("weight 20", d20.c, a1 * q(1, 1024) + q(1, 4) * b1 * cx);
        m.scalar("weight 22", d22.c, a2 * q(1, 2048) + q(1, 8) * b2 * cx);
        return m.done("a1 = " + a1.to_string() + ", a2 = " + a2.to_string() + ", c(X16) = " + cx.to_string());
      });
  add("ratio-inequality", "(c20/2)/c22 = 32688117/2563276 differs from (14760/11)/(19408720/(7007*27)) = 6346431/485218",
      {"ratio-inequality", "coefficient-functional"}, 6, true, [](Workbench& wb) {
        const auto& d20 = wb.decomposition(-3);
        const auto& d22 = wb.decomposition(-5);
        const Scalar lhs = (d20.c * q(1, 2)) / d22.c;
        const Scalar b1 = d20.coefficient({2, 2}, WordBase::U16);
        const Scalar b2 = d22.coefficient({2, 2, 2}, WordBase::U16);
        const Scalar rhs = b1 / b2;
        const Scalar a1 = d20.coefficient(std::vector<int>(10, 2), WordBase::Vacuum);
        const Scalar a2 = d22.coefficient(std::vector<int>(11, 2), WordBase::Vacuum);
        Multi m;
        m.scalar("left ratio", lhs, q(32688117, 2563276));
        m.scalar("right ratio", rhs, q(6346431, 485218));
        m.add("left != right", lhs != rhs, lhs != rhs ? "true" : "false", "true");
        m.add("a1/a2 != right", a1 / a2 != rhs, (a1 / a2).to_string(), "not " + rhs.to_string());
        return m.done();
      });
  add("c-virasoro-powers", "c(L(-2)^k 1) for k = 1, 2, 3 (reference lists 2^k)", {"coefficient-functional"}, 6, false,
      [](Workbench&) {
        std::string got, reference;
        bool literal = true, inverse = true;
        for (int k = 1; k <= 3; ++k) {
          const Scalar c = c_functional(apply_word(std::vector<int>(k, 2), State::vacuum()));
          literal = literal && c == Scalar(1L << k);
          inverse = inverse && c == q(1, 1L << k);
          got += (k > 1 ? ", " : "") + c.to_string();
          reference += (k > 1 ? ", " : "") + std::to_string(1L << k);
        }
        CheckOutcome o = outcome(literal, got, reference);
        if (!literal && inverse) {
          o.status = Status::Finding;
          o.note = "computed 2^-k, which is what the a1/2^10 and a2/2^11 terms of the consistency identities use";
        }
        return o;
      });

  // ---- twisted sectors ----
  add("twisted-omega-expansion", "Delta(hprime,z) omega = omega + z^-1 hprime + (1/36) z^-2 1, and with -hprime",
      {"twisted-modules", "twisted-mode-convention"}, 7, false, [](Workbench&) {
        Multi m;
        for (int s : {1, -1}) {
          const State h = nv("hprime") * Scalar(s);
          const auto d = delta_apply(h, nv("omega"));
          RationalPowerSeries want;
          want.add(0, nv("omega"));
          want.add(-1, h);
          want.add(-2, State::vacuum() * q(1, 36));
          bool same = d.terms().size() == want.terms().size();
          for (std::size_t k = 0; same && k < d.terms().size(); ++k)
            same = d.terms()[k].exponent == want.terms()[k].exponent && d.terms()[k].coeff == want.terms()[k].coeff;
          m.add(s > 0 ? "Delta(hprime)" : "Delta(-hprime)", same, d.to_string(), want.to_string());
        }
        return m.done();
      });
  add("twisted-field-shifts", "Y_sigma(hprime) = Y(hprime + z^-1/18), Y_sigma(y1) = z^{1/3}Y(y1), Y_sigma(y2) = z^{-1/3}Y(y2); reversed for -hprime",
      {"twisted-modules", "twisted-mode-convention"}, 7, false, [](Workbench&) {
        Multi m;
        auto single = [](const RationalPowerSeries& s, const Rational& e, const State& c) {
          return s.terms().size() == 1 && s.terms()[0].exponent == e && s.terms()[0].coeff == c;
        };
        for (int s : {1, -1}) {
          const State h = nv("hprime") * Scalar(s);
          const std::string tag = s > 0 ? "hprime" : "-hprime";
          const auto dh = delta_apply(h, h);
          const bool okh = dh.terms().size() == 2 && dh.terms()[0].exponent == -1 &&
                           dh.terms()[0].coeff == State::vacuum() * q(1, 18) && dh.terms()[1].exponent == 0 &&
                           dh.terms()[1].coeff == h;
          m.add("Delta(" + tag + ") " + tag, okh, dh.to_string(), "(" + h.to_string() + ")*z^0 + (1/18)*z^-1");
          const auto d1 = delta_apply(h, nv("y1"));
          const auto d2 = delta_apply(h, nv("y2"));
          m.add("Delta(" + tag + ") y1", single(d1, frac(s, 3), nv("y1")), d1.to_string(),
                "y1*z^" + frac(s, 3).get_str());
          m.add("Delta(" + tag + ") y2", single(d2, frac(-s, 3), nv("y2")), d2.to_string(),
                "y2*z^" + frac(-s, 3).get_str());
        }
        return m.done();
      });
  add("hprime-heisenberg", "hprime(n)hprime = delta_{n,1}/18, L(n)hprime = delta_{n,0} hprime", {"twisted-modules"},
      7, false, [](Workbench&) {
        Multi m;
        for (int n = 0; n <= 3; ++n) {
          m.state("hprime(" + std::to_string(n) + ")hprime", mode_apply(nv("hprime"), n, nv("hprime")),
                  n == 1 ? State::vacuum() * q(1, 18) : State());
          m.state("L(" + std::to_string(n) + ")hprime", virasoro(n, nv("hprime")), n == 0 ? nv("hprime") : State());
        }
        return m.done();
      });
  add("hprime-zero-mode-actions", "hprime(0) on y1, y2, w1, w2 and the y-actions on w and y",
      {"twisted-modules", "named-vectors"}, 7, false, [](Workbench&) {
        Multi m;
        const State& h = nv("hprime");
        m.state("hprime(0)y1", mode_apply(h, 0, nv("y1")), nv("y1") * q(1, 3));
        m.state("hprime(0)y2", mode_apply(h, 0, nv("y2")), nv("y2") * q(-1, 3));
        m.state("y1(0)y2", mode_apply(nv("y1"), 0, nv("y2")), h * q(6));
        m.state("hprime(0)w1", mode_apply(h, 0, nv("w1")), nv("w1") * q(1, 6));
        m.state("hprime(0)w2", mode_apply(h, 0, nv("w2")), nv("w2") * q(-1, 6));
        m.state("y1(0)w1", mode_apply(nv("y1"), 0, nv("w1")), State());
        m.state("y1(0)w2", mode_apply(nv("y1"), 0, nv("w2")), nv("w1"));
        m.state("y2(0)w1", mode_apply(nv("y2"), 0, nv("w1")), nv("w2"));
        return m.done();
      });
  add("zero-mode-eigenspaces", "hprime(0) eigenspaces on V_L2 at weight 1 and on V_{L2+a/2} at weight 1/4",
      {"twisted-modules", "sigma-eigenspaces"}, 7, false, [](Workbench&) {
        Multi m;
        const auto e1 = zero_mode_eigenspaces(nv("hprime"), SectorId::full_l2(), 1);
        const auto e2 = zero_mode_eigenspaces(nv("hprime"), SectorId::full_l2_half(), frac(1, 4));
        std::map<Rational, std::string> want1 = {{frac(-1, 3), "y2"}, {0, "hprime"}, {frac(1, 3), "y1"}};
        std::map<Rational, std::string> want2 = {{frac(-1, 6), "w2"}, {frac(1, 6), "w1"}};
        auto verify = [&](const std::vector<Eigenspace>& es, const std::map<Rational, std::string>& want,
                          const std::string& tag) {
          m.integer(tag + " eigenvalue count", static_cast<long long>(es.size()), static_cast<long long>(want.size()));
          for (const auto& e : es) {
            auto it = want.find(e.eigenvalue);
            const bool ok = it != want.end() && spans_line(e.basis, nv(it->second.c_str()));
            m.add(tag + " eigenvalue " + e.eigenvalue.get_str(), ok, ok ? it->second : "mismatch",
                  it != want.end() ? it->second : "none");
          }
        };
        verify(e1, want1, "V_L2(1)");
        verify(e2, want2, "V_L2+a/2(1/4)");
        return m.done();
      });
  add("twisted-lowest-weights", "lowest L^sigma(0) weights of W^1 and W^2 are 1/36 and 1/9 for both twists",
      {"twisted-modules"}, 7, false, [](Workbench&) {
        Multi m;
        for (int j = 1; j <= 2; ++j) {
          m.rational("W1T" + std::to_string(j), twisted_lowest_weight(twisted_sector(1, j)), frac(1, 36));
          m.rational("W2T" + std::to_string(j), twisted_lowest_weight(twisted_sector(2, j)), frac(1, 9));
        }
        return m.done();
      });
  add("twisted-graded-pieces", "graded pieces W^{i,T_j}(n) for n <= 5/3", {"twisted-modules"}, 7, false,
      [](Workbench&) {
        Multi m;
        const State y2w2 = mode_apply(nv("y2"), -2, nv("w2"));
        const State y1w1 = mode_apply(nv("y1"), -2, nv("w1"));
        struct Piece {
          int i, j;
          Rational n;
          std::optional<State> line;  // empty: the piece is zero
        };
        const std::vector<Piece> pieces = {
            {1, 1, 0, State::vacuum()}, {1, 1, frac(1, 3), std::nullopt}, {1, 1, frac(2, 3), nv("y2")},
            {1, 1, frac(4, 3), nv("y1")}, {2, 1, 0, nv("w2")}, {2, 1, frac(1, 3), nv("w1")},
            {2, 1, frac(2, 3), std::nullopt}, {2, 1, frac(5, 3), y2w2},
            {1, 2, 0, State::vacuum()}, {1, 2, frac(1, 3), std::nullopt}, {1, 2, frac(2, 3), nv("y1")},
            {1, 2, frac(4, 3), nv("y2")}, {2, 2, 0, nv("w1")}, {2, 2, frac(1, 3), nv("w2")},
            {2, 2, frac(2, 3), std::nullopt}, {2, 2, frac(5, 3), y1w1}};
        for (const auto& p : pieces) {
          const auto basis = twisted_graded_piece(twisted_sector(p.i, p.j), p.n);
          const std::string label = "W" + std::to_string(p.i) + "T" + std::to_string(p.j) + "(" + p.n.get_str() + ")";
          if (!p.line)
            m.add(label, basis.empty(), basis.empty() ? "0" : std::to_string(basis.size()) + "-dim", "0");
          else
            m.add(label, spans_line(basis, *p.line), std::to_string(basis.size()) + "-dim" +
                  (spans_line(basis, *p.line) ? " line through " + p.line->to_string() : ""),
                  "line through " + p.line->to_string());
        }
        // twisted modes realizing the pieces
        const State& h = nv("hprime");
        m.state("y2_{-5/3} w2 (T1)", twisted_mode_apply(nv("y2"), frac(-5, 3), nv("w2"), h), y2w2);
        m.state("y1_{-5/3} w1 (T2)", twisted_mode_apply(nv("y1"), frac(-5, 3), nv("w1"), -h), y1w1);
        m.state("y2_{-2/3} 1 (T1)", twisted_mode_apply(nv("y2"), frac(-2, 3), State::vacuum(), h), nv("y2"));
        m.state("y1_{-4/3} 1 (T1)", twisted_mode_apply(nv("y1"), frac(-4, 3), State::vacuum(), h), nv("y1"));
        m.state("y1_{-1/3} 1 (T1)", twisted_mode_apply(nv("y1"), frac(-1, 3), State::vacuum(), h), State());
        const State y1w2 = twisted_mode_apply(nv("y1"), frac(-1, 3), nv("w2"), h);
        m.add("y1_{-1/3} w2 in C w1 (T1)", spans_line({nv("w1")}, y1w2), y1w2.to_string(), "nonzero multiple of w1");
        return m.done();
      });
  add("twisted-twelve-weights", "L(0) eigenvalues of the twelve generating vectors of the twisted-type modules",
      {"twisted-modules", "classification"}, 7, false, [](Workbench&) {
        const Rational want[12] = {frac(1, 36), frac(25, 36), frac(49, 36), frac(1, 9), frac(4, 9), frac(16, 9),
                                   frac(1, 36), frac(25, 36), frac(49, 36), frac(1, 9), frac(4, 9), frac(16, 9)};
        Multi m;
        const auto tops = twisted_top_vectors();
        for (std::size_t k = 0; k < tops.size(); ++k) m.rational(tops[k].label, tops[k].weight, want[k]);
        return m.done();
      });
  add("twisted-mode-grading", "twisted modes respect the r/3 + Z index sets and the L^sigma(0) grading",
      {"twisted-modules", "twisted-mode-convention"}, 7, false,
      [](Workbench& wb) { return property_outcome(twisted_grading_property(wb.config.twisted_weight)); });

  // ---- module tables ----
  add("vplus-module-table", "o(omega), o(E), o(J) on the tops of the seven realized irreducible Vzb+-modules",
      {"module-tables", "module-cosets"}, 8, false, [](Workbench& wb) {
        const std::map<std::string, std::array<Rational, 3>> want = {
            {"V+", {0, 0, 0}},
            {"V-", {1, 0, -6}},
            {"V(b/8)", {frac(1, 16), 0, frac(-3, 64)}},
            {"V(b/4)", {frac(1, 4), 0, 0}},
            {"V(3b/8)", {frac(9, 16), 0, frac(45, 64)}},
            {"V(b/2)+", {1, 1, 3}},
            {"V(b/2)-", {1, -1, 3}}};
        Multi m;
        for (const auto& row : wb.vplus_table()) {
          if (row.display_only) continue;
          const auto& w = want.at(row.module);
          m.scalar(row.module + " omega", row.omega, Scalar(w[0]));
          m.scalar(row.module + " E", row.E, Scalar(w[1]));
          m.scalar(row.module + " J", row.J, Scalar(w[2]));
        }
        return m.done("the four theta-twisted columns are display-only");
      });
  add("sigma-conjugate-pattern", "top-level triples of W^sigma permute the modules in the expected pattern",
      {"module-tables", "sigma-action"}, 8, false, [](Workbench&) {
        const std::map<std::string, std::string> want = {
            {"V+", "V+"},         {"V(b/4)", "V(b/4)"}, {"V-", "V(b/2)-"}, {"V(b/2)-", "V(b/2)+"},
            {"V(b/2)+", "V-"},    {"V(b/8)", "VT2+"},   {"VT2+", "VT1+"},  {"VT1+", "V(b/8)"},
            {"V(3b/8)", "VT2-"},  {"VT2-", "VT1-"},     {"VT1-", "V(3b/8)"}};
        const auto got = sigma_conjugate_pattern();
        Multi m;
        for (const auto& [k, v] : want) m.add(k + "^sigma", got.at(k) == v, got.at(k), v);
        const SigmaOnJE s = sigma_inverse_on_JE();
        return m.done("sigma^-1(J) = " + s.jj.to_string() + " J + " + s.je.to_string() + " E; sigma^-1(E) = " +
                      s.ej.to_string() + " J + " + s.ee.to_string() + " E");
      });
  add("irreducible-catalog", "the 21 irreducible modules of the orbifold with their lowest weights",
      {"classification"}, 8, false, [](Workbench& wb) {
        Multi m;
        const auto& cat = wb.catalog();
        m.integer("count", static_cast<long long>(cat.size()), 21);
        for (const auto& d : cat) m.rational(d.name, d.lowest_weight, d.expected_weight);
        return m.done();
      });
  add("quarter-module", "sigma-eigen decomposition of V_{Zb+b/4}: weights 1/4, 9/4, 9/4 and the constant a",
      {"classification", "sigma-eigenspaces"}, 8, false, [](Workbench& wb) {
        const QuarterModule& qm = wb.quarter();
        Multi m;
        m.integer("dim of weight 1/4 (theta-even)", qm.dim_top, 1);
        m.integer("dim of weight 9/4 (theta-even)", qm.dim_94, 3);
        std::vector<std::string> ws;
        for (const auto& w : qm.weights) ws.push_back(w.get_str());
        m.add("weights", qm.weights == std::vector<Rational>{frac(1, 4), frac(9, 4), frac(9, 4)}, join(ws),
              "1/4, 9/4, 9/4");
        m.add("shape h(-2)(e^{b/4}-e^{-b/4}) - sqrt2 h(-1)^2(e^{b/4}+e^{-b/4}) +- a(e^{3b/4}+e^{-3b/4})", qm.shape_ok,
              qm.shape_ok ? "matches" : "differs", "matches");
        m.add("a != 0", !qm.a.is_zero(), qm.a.to_string(), "nonzero");
        std::string gens;
        for (std::size_t k = 0; k < qm.generators.size(); ++k)
          gens += (k ? "; " : "") + qm.eigenvalues[k + 1].to_string() + ": " + qm.generators[k].to_string();
        return m.done("eigenvectors " + gens);
      });

  // ---- characters ----
  auto hei1 = [](int mm) {
    return [mm](Workbench& wb) {
      const int n = wb.config.max_weight;
      QSeries sum(n);
      for (int p = 0; (2 * mm + p) * (2 * mm + p) <= n; ++p) sum += char_L1(2 * mm + p, n);
      const QSeries want = graded_dim("M1(" + std::to_string(mm) + ")", n);
      return outcome(sum == want, sum.to_string(), want.to_string());
    };
  };
  add("character-lattice-module-m1", "M(1, 2 sqrt2) = sum_p L(1, (2+p)^2) as graded spaces", {"characters"}, 9,
      false, hei1(1));
  add("character-lattice-module-m2", "M(1, 4 sqrt2) = sum_p L(1, (4+p)^2) as graded spaces", {"characters"}, 9,
      false, hei1(2));
  add("character-vplus", "Vzb+ = M(1)+ + sum_m M(1, 2 sqrt2 m) as graded spaces", {"characters"}, 9, false,
      [](Workbench& wb) {
        const int n = wb.config.max_weight;
        QSeries sum = graded_dim("M1+", n);
        for (int mm = 1; 4 * mm * mm <= n; ++mm) sum += graded_dim("M1(" + std::to_string(mm) + ")", n);
        const QSeries got = graded_dim("Vzb+", n);
        return outcome(got == sum, got.to_string(), sum.to_string());
      });
  add("fixed-algebra-decomposition", "sigma-fixed algebra = L(1,0) + L(1,9) + L(1,16) + sum_{n>=6} a_n L(1,n^2)",
      {"characters", "sigma-eigenspaces"}, 9, false, [](Workbench& wb) {
        const auto& d = wb.fixed_decomposition();
        Multi m;
        m.add("peeling", d.ok, d.ok ? "nonnegative" : d.error, "nonnegative");
        if (d.ok) {
          const std::map<int, long long> want = {{0, 1}, {1, 0}, {2, 0}, {3, 1}, {4, 1}, {5, 0}};
          for (const auto& [n, mult] : want)
            if (n * n <= wb.config.max_weight) m.integer("a" + std::to_string(n), d.multiplicity.at(n), mult);
        }
        std::string all;
        for (const auto& [n, mult] : d.multiplicity) all += (all.empty() ? "" : " ") + std::to_string(n) + ":" + std::to_string(mult);
        return m.done("multiplicities " + all);
      });
  add("fixed-weight4-in-vacuum-module", "the sigma-fixed weight-4 space equals the vacuum-module weight-4 space",
      {"characters", "sigma-eigenspaces"}, 9, false, [](Workbench&) {
        Multi m;
        const SubspaceBasis v4 = fixed_subspace({tau1, theta}, SectorId::full_l2(), 4);
        const SubspaceBasis f4 = eigen_subspace(sigma, Scalar(1), v4);
        m.integer("dim", static_cast<long long>(f4.size()), 2);
        const State one = State::vacuum();
        for (const auto& parts : std::vector<std::vector<int>>{{4}, {2, 2}}) {
          const bool in = f4.coordinates(apply_word(parts, one)).has_value();
          m.add(VirasoroWord{parts, WordBase::Vacuum}.to_string() + " in fixed space", in, in ? "yes" : "no", "yes");
        }
        return m.done();
      });
  add("k-fixed-character", "graded dimensions of the tau1/theta-fixed part of V_L2 equal those of Vzb+ to weight 16",
      {"characters", "automorphisms", "theta-involution"}, 9, false, [](Workbench& wb) {
        const int n = std::min(16, wb.config.max_weight);
        const QSeries got = graded_dim("VL2K", n);
        const QSeries want = graded_dim("Vzb+", n);
        return outcome(got == want, got.to_string(), want.to_string());
      });
  add("k-fixed-weight4-basis", "the tau1/theta-fixed weight-4 space is spanned by L(-2)^2 1, L(-4) 1, J, E",
      {"characters", "automorphisms"}, 9, false, [](Workbench&) {
        Multi m;
        const SubspaceBasis v4 = fixed_subspace({tau1, theta}, SectorId::full_l2(), 4);
        m.integer("dim", static_cast<long long>(v4.size()), 4);
        const State one = State::vacuum();
        const std::vector<std::pair<std::string, State>> gens = {{"L(-2)^2 1", apply_word({2, 2}, one)},
                                                                 {"L(-4) 1", apply_word({4}, one)},
                                                                 {"J", nv("J")},
                                                                 {"E", nv("E")}};
        std::vector<State> cols;
        for (const auto& [name, v] : gens) {
          const bool in = v4.coordinates(v).has_value();
          m.add(name + " fixed", in, in ? "yes" : "no", "yes");
          cols.push_back(v);
        }
        int rank = 0;
        {
          // independence of the four generators
          const SpanSolve s = solve_in_span(State(), cols);
          rank = s.rank;
        }
        m.integer("rank of generators", rank, 4);
        return m.done();
      });
  add("sigma-eigenspace-dimensions", "sigma-eigenspace dimensions of Vzb+ add up and match the trace formula",
      {"sigma-eigenspaces", "characters"}, 9, true, [](Workbench& wb) {
        Multi m;
        for (int w = 0; w <= wb.config.eigen_weight; ++w) {
          const SigmaEigenDims d = sigma_eigen_dims(w);
          const std::string t = "w=" + std::to_string(w);
          m.integer(t + " d0+d1+d2", d.d0 + d.d1 + d.d2, d.total);
          m.integer(t + " d0", d.d0, sigma_fixed_dim_trace(w));
          m.integer(t + " d1-d2", d.d1 - d.d2, 0);
        }
        return m.done();
      });
  add("fixed-weight9-primary", "the sigma-fixed weight-9 space has exactly one dimension beyond the vacuum module",
      {"characters", "weight9-primary"}, 9, false, [](Workbench&) {
        const QSeries fixed = graded_dim("fixed", 9);
        const QSeries vac = char_L1(0, 9);
        Multi m;
        m.integer("dim fixed - dim L(1,0) at weight 9", fixed[9] - vac[9], 1);
        return m.done();
      });

  // ---- properties ----
  add("property-heisenberg-commutator", "[h(m), h(n)] = m delta_{m+n,0} on random states",
      {"lattice-construction"}, 10, false,
      [](Workbench& wb) { return property_outcome(heisenberg_commutator_property(wb.config.seed)); });
  add("property-borcherds-commutator", "Borcherds commutator formula for (omega,omega), (omega,E), (E,E), (J,E)",
      {"lattice-construction"}, 10, false,
      [](Workbench& wb) { return property_outcome(borcherds_commutator_property(wb.config.seed + 1)); });
  add("property-virasoro-relations", "Virasoro relations with c = 1", {"lattice-construction"}, 10, false,
      [](Workbench& wb) { return property_outcome(virasoro_relations_property(wb.config.seed + 2)); });
  add("property-skew-symmetry", "skew symmetry for (J,E), (E,J), (J,J); certifies the trivial cocycle",
      {"lattice-construction"}, 10, false, [](Workbench&) { return property_outcome(skew_symmetry_property()); });
  add("property-form-invariance", "(L(n)u, v) = (u, L(-n)v) on random pairs", {"bilinear-form"}, 10, false,
      [](Workbench& wb) { return property_outcome(form_invariance_property(wb.config.seed + 3)); });
  add("property-primary-adjoint", "(E_n u, v) = (u, E_{6-n} v) on random pairs", {"bilinear-form"}, 10, false,
      [](Workbench& wb) { return property_outcome(primary_adjoint_property(wb.config.seed + 4)); });
  add("property-grading", "wt(u_n v) = wt u + wt v - n - 1", {"lattice-construction"}, 10, false,
      [](Workbench& wb) { return property_outcome(grading_property(wb.config.seed + 5)); });
  add("property-involutions", "theta and tau1 are involutions on random states", {"theta-involution"}, 10, false,
      [](Workbench& wb) { return property_outcome(involution_property(wb.config.seed + 6)); });
  add("property-sigma-virasoro", "sigma commutes with L(n), n in [-4, 4]", {"sigma-action"}, 10, false,
      [](Workbench& wb) { return property_outcome(sigma_virasoro_property(wb.config.seed + 7)); });

  add("registry-coverage", "every required topic is covered by at least one check", {}, 0, false, [](Workbench&) {
    std::set<std::string> seen;
    for (const auto& c : check_registry())
      for (const auto& t : c.topics) seen.insert(t);
    std::vector<std::string> missing;
    for (const auto& t : required_topics())
      if (!seen.count(t)) missing.push_back(t);
    return outcome(missing.empty(), missing.empty() ? "all covered" : "missing: " + join(missing), "all covered");
  });

  std::sort(r.begin(), r.end(), [](const CheckSpec& a, const CheckSpec& b) { return a.id < b.id; });
  return r;
}

}  // namespace

const std::vector<std::string>& required_topics() {
  static const std::vector<std::string> t = {
      "lattice-construction", "module-cosets",     "theta-involution",          "twisted-mode-convention",
      "named-vectors",        "automorphisms",     "sigma-action",              "mode-products",
      "weight9-primary",      "bilinear-form",     "u16-extraction",            "weight16-membership",
      "gram-system",          "coefficient-functional", "weight20-22-decomposition", "ratio-inequality",
      "twisted-modules",      "sigma-eigenspaces", "module-tables",             "classification",
      "characters"};
  return t;
}

const std::vector<CheckSpec>& check_registry() {
  static const std::vector<CheckSpec> r = build_registry();
  return r;
}

std::vector<std::string> select_checks(const std::vector<std::string>& selection) {
  std::set<std::string> ids;
  for (const auto& s : selection) {
    bool matched = false;
    for (const auto& c : check_registry()) {
      bool hit = s == "all" || c.id == s || std::find(c.topics.begin(), c.topics.end(), s) != c.topics.end();
      if (s.rfind("criterion:", 0) == 0) hit = std::to_string(c.criterion) == s.substr(10);
      if (hit) {
        ids.insert(c.id);
        matched = true;
      }
    }
    if (!matched) throw std::invalid_argument("no check matches '" + s + "'");
  }
  return {ids.begin(), ids.end()};
}

Report run_checks(const std::vector<std::string>& ids, const Config& config, int jobs) {
  Report rep;
  rep.version = tool_version();
  rep.config = config;
  std::vector<const CheckSpec*> todo;
  for (const auto& id : ids) {
    auto it = std::find_if(check_registry().begin(), check_registry().end(),
                           [&](const CheckSpec& c) { return c.id == id; });
    if (it == check_registry().end()) throw std::invalid_argument("unknown check '" + id + "'");
    todo.push_back(&*it);
  }
  std::stable_sort(todo.begin(), todo.end(), [](const CheckSpec* a, const CheckSpec* b) { return a->heavy > b->heavy; });
  Workbench wb(config);
  std::vector<CheckResult> results(todo.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (;;) {
      const std::size_t k = next++;
      if (k >= todo.size()) return;
      const CheckSpec& c = *todo[k];
      CheckResult& res = results[k];
      res.id = c.id;
      res.criterion = c.criterion;
      const auto t0 = std::chrono::steady_clock::now();
      try {
        CheckOutcome o = c.run(wb);
        res.status = o.status;
        res.computed = std::move(o.computed);
        res.expected = std::move(o.expected);
        res.note = std::move(o.note);
      } catch (const std::exception& e) {
        res.status = Status::Fail;
        res.computed = std::string("exception: ") + e.what();
      }
      res.ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    }
  };
  const int n = std::max(1, std::min<int>(jobs, static_cast<int>(todo.size())));
  std::vector<std::thread> pool;
  for (int t = 1; t < n; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  std::sort(results.begin(), results.end(), [](const CheckResult& a, const CheckResult& b) { return a.id < b.id; });
  for (const auto& r : results) {
    if (r.status == Status::Pass) ++rep.pass;
    if (r.status == Status::Fail) ++rep.fail;
    if (r.status == Status::Finding) ++rep.finding;
  }
  rep.checks = std::move(results);
  return rep;
}

}  // namespace voalab
