#include "voalab/named.hpp"

#include <map>
#include <mutex>

#include "voalab/structure.hpp"
#include "voalab/vertex.hpp"

namespace voalab {

namespace {

State mono(const std::vector<int>& parts, int q8, const Scalar& c) {
  return State(Monomial::from_parts(parts, q8), c);
}

State heis(const std::vector<std::pair<Scalar, std::vector<int>>>& terms) {
  State s;
  for (const auto& [c, p] : terms) s.add(Monomial::from_parts(p), c);
  return s;
}

// Heisenberg polynomial tensored with e^{q beta}.
State tensor(const State& heis_part, int q8) {
  State s;
  for (const auto& [m, c] : heis_part.terms()) {
    Monomial t(m);
    t.set_q8(q8);
    s.add(t, c);
  }
  return s;
}

Scalar q(long n, long d = 1) { return Scalar(frac(n, d)); }

State word_combo(const std::vector<std::pair<Scalar, std::vector<int>>>& terms, const State& base) {
  State s;
  for (const auto& [c, w] : terms) s.axpy(c, apply_word(w, base));
  return s;
}

std::map<std::string, State> build_catalog() {
  std::map<std::string, State> cat;
  const State one = State::vacuum();
  const Scalar r2 = Scalar::sqrt2(), r3 = Scalar::sqrt3(), i = Scalar::i();
  const Scalar inv_r2(Scalar::kSqrt2, frac(1, 2));

  cat["one"] = one;
  cat["omega"] = mono({1, 1}, 0, q(1, 2));
  cat["h"] = mono({1}, 0, 1);
  cat["J"] = heis({{q(1), {1, 1, 1, 1}}, {q(-2), {3, 1}}, {q(3, 2), {2, 2}}});
  cat["E"] = State::lattice(8) + State::lattice(-8);
  cat["F"] = State::lattice(8) - State::lattice(-8);
  cat["E2"] = State::lattice(16) + State::lattice(-16);
  cat["x1"] = mono({1}, 0, 1);  // alpha(-1)/sqrt2 = h(-1)
  cat["x2"] = (State::lattice(4) + State::lattice(-4)) * inv_r2;
  cat["x3"] = (State::lattice(4) - State::lattice(-4)) * (i * inv_r2);
  const Scalar r27i = Scalar(3) * r3 * i;
  cat["X1"] = cat["J"] - cat["E"] * r27i;
  cat["X2"] = cat["J"] + cat["E"] * r27i;
  // 1/(3 sqrt6) = sqrt6/18
  const Scalar c_hp(Scalar::kSqrt6, frac(1, 18));
  cat["hprime"] = (cat["x1"] + cat["x2"] - cat["x3"]) * c_hp;
  const Scalar inv_r3(Scalar::kSqrt3, frac(1, 3));
  const Scalar z3 = Scalar::zeta3(), z6 = Scalar::zeta6();
  const Scalar z3b = z3.conj_i(), z6b = z6.conj_i();
  cat["y1"] = (cat["x1"] + cat["x2"] * z3 + cat["x3"] * z6) * inv_r3;
  cat["y2"] = (cat["x1"] + cat["x2"] * z3b + cat["x3"] * z6b) * inv_r3;
  const Scalar r3m1 = r3 - Scalar(1);
  const Scalar onei = Scalar(1) + i;
  cat["w1"] = State::lattice(2) + State::lattice(-2) * (r3m1 * onei * q(1, 2));
  cat["w2"] = (State::lattice(2) * r3m1 - State::lattice(-2) * onei) * inv_r2;

  cat["u0"] = word_combo({{q(-8, 3), {4}}, {q(112, 9), {2, 2}}}, one);
  cat["u1"] = word_combo({{q(-16, 9), {5}}, {q(112, 9), {3, 2}}}, one);
  cat["u2"] = word_combo({{q(-1856, 135), {6}},
                          {q(-2384, 135), {4, 2}},
                          {q(1316, 135), {3, 3}},
                          {q(1088, 135), {2, 2, 2}}},
                         one);
  cat["u3"] = word_combo({{q(-464, 45), {7}},
                          {q(-928, 45), {5, 2}},
                          {q(40, 9), {4, 3}},
                          {q(544, 45), {3, 2, 2}}},
                         one);
  const auto v_even = std::vector<std::pair<Scalar, std::vector<int>>>{{q(28, 75), {2}}, {q(23, 300), {1, 1}}};
  const auto v_odd = std::vector<std::pair<Scalar, std::vector<int>>>{
      {q(14, 75), {3}}, {q(14, 75), {2, 1}}, {q(-1, 300), {1, 1, 1}}};
  cat["v2"] = word_combo(v_even, cat["J"]);
  cat["v3"] = word_combo(v_odd, cat["J"]);
  cat["v4"] = word_combo(v_even, cat["E"]);
  cat["v5"] = word_combo(v_odd, cat["E"]);

  const State plusE = heis({{q(15), {4, 1}}, {q(10), {3, 2}}, {q(10), {2, 1, 1, 1}}});
  const State minusF = heis({{q(6), {5}}, {q(10), {3, 1, 1}}, {q(15, 2), {2, 2, 1}}, {q(1), {1, 1, 1, 1, 1}}});
  State u9 = (tensor(plusE, 8) + tensor(plusE, -8)) * (-inv_r2);
  u9 += tensor(minusF, 8) - tensor(minusF, -8);
  cat["u9"] = u9;
  return cat;
}

const std::map<std::string, State>& catalog() {
  static const std::map<std::string, State> cat = build_catalog();
  return cat;
}

}  // namespace

const std::vector<std::string>& named_vector_names() {
  static const std::vector<std::string> names = {
      "one", "omega", "J", "E", "F", "E2", "X1", "X2", "x1", "x2", "x3", "y1", "y2", "h", "hprime",
      "u0", "u1", "u2", "u3", "v2", "v3", "v4", "v5", "u9", "u16", "w1", "w2"};
  return names;
}

bool is_named_vector(const std::string& name) {
  for (const auto& n : named_vector_names())
    if (n == name) return true;
  return false;
}

const State& named_vector(const std::string& name) {
  if (name == "u16") {
    static std::once_flag once;
    static State u16;
    std::call_once(once, [] { u16 = build_u16(); });
    return u16;
  }
  const auto& cat = catalog();
  auto it = cat.find(name);
  if (it == cat.end()) throw UnknownName("unknown named vector '" + name + "'");
  return it->second;
}

}  // namespace voalab
