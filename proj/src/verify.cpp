#include "togglekit/verify.hpp"

#include <algorithm>
#include <array>
#include <deque>
#include <functional>
#include <map>
#include <optional>
#include <set>

#include "togglekit/chain_stats.hpp"
#include "togglekit/ehrhart.hpp"
#include "togglekit/json_io.hpp"
#include "togglekit/moon.hpp"
#include "togglekit/random_gen.hpp"
#include "togglekit/tableau_maps.hpp"

namespace togglekit {

namespace {

using nlohmann::json;

struct TrialFailure {
  std::string message;
  json data;
};

using Suite = std::function<std::optional<TrialFailure>(std::uint64_t, const VerifyOptions&)>;

const std::array<Realm, 2> kRealms{Realm::PL, Realm::Birational};

json fail_data(Realm realm, const Labeling& x) {
  return json{{"realm", realm_str(realm)}, {"input", labeling_to_json(x)}};
}

std::vector<RectCoord> all_cells(RectShape shape) {
  return resolve_region(shape, Region::full());
}

Rat stat(const Labeling& x, int u1, int v1, int u2, int v2, int k) {
  return max_weight(x, PathFamilySpec{u1, v1, u2, v2, k});
}

// ---- rectangle-labeling suites ------------------------------------------

std::optional<TrialFailure> toggle_involution(std::uint64_t seed, const VerifyOptions& opt) {
  RectShape shape{opt.r, opt.s};
  for (size_t t = 0; t < kRealms.size(); ++t) {
    Realm realm = kRealms[t];
    Labeling x = random_labeling(shape, realm, split_seed(seed, t));
    SplitMix64 rng(split_seed(seed, 10 + t));
    RectCoord p{static_cast<int>(rng.range(1, opt.r)), static_cast<int>(rng.range(1, opt.s))};
    if (toggle(toggle(x, p), p) != x)
      return TrialFailure{"toggle applied twice moved the labeling", fail_data(realm, x)};
  }
  return std::nullopt;
}

std::optional<TrialFailure> toggle_commutation(std::uint64_t seed, const VerifyOptions& opt) {
  RectShape shape{opt.r, opt.s};
  for (size_t t = 0; t < kRealms.size(); ++t) {
    Realm realm = kRealms[t];
    Labeling x = random_labeling(shape, realm, split_seed(seed, t));
    SplitMix64 rng(split_seed(seed, 10 + t));
    // Cells sharing a file or a rank are never covering pairs.
    std::vector<std::pair<RectCoord, RectCoord>> pairs;
    for (RectCoord p : all_cells(shape))
      for (RectCoord q : all_cells(shape)) {
        if (!(p < q)) continue;
        if (file_of(p) == file_of(q) || rank_of(p) == rank_of(q)) pairs.push_back({p, q});
      }
    if (pairs.empty()) continue;
    auto [p, q] = pairs[rng.range(0, static_cast<int>(pairs.size()) - 1)];
    if (toggle(toggle(x, p), q) != toggle(toggle(x, q), p))
      return TrialFailure{"separated toggles failed to commute", fail_data(realm, x)};
  }
  return std::nullopt;
}

std::optional<TrialFailure> phi_roundtrip(std::uint64_t seed, const VerifyOptions& opt) {
  RectShape shape{opt.r, opt.s};
  for (size_t t = 0; t < kRealms.size(); ++t) {
    Realm realm = kRealms[t];
    Labeling x = random_labeling(shape, realm, split_seed(seed, t));
    if (transfer_inverse(transfer(x)) != x || transfer(transfer_inverse(x)) != x)
      return TrialFailure{"transfer map failed to round-trip", fail_data(realm, x)};
  }
  return std::nullopt;
}

std::optional<TrialFailure> rsk_roundtrip(std::uint64_t seed, const VerifyOptions& opt) {
  RectShape shape{opt.r, opt.s};
  for (size_t t = 0; t < kRealms.size(); ++t) {
    Realm realm = kRealms[t];
    Labeling x = random_labeling(shape, realm, split_seed(seed, t));
    SplitMix64 rng(split_seed(seed, 10 + t));
    if (rsk(rsk(x), true) != x)
      return TrialFailure{"rsk failed to round-trip", fail_data(realm, x)};
    int a = static_cast<int>(rng.range(1, opt.r + 1));
    int b = static_cast<int>(rng.range(1, opt.s + 1));
    if (rsk_ab(rsk_ab(x, a, b), a, b, true) != x) {
      json data = fail_data(realm, x);
      data["a"] = a;
      data["b"] = b;
      return TrialFailure{"truncated rsk failed to round-trip", data};
    }
  }
  return std::nullopt;
}

std::optional<TrialFailure> rowmotion_period(std::uint64_t seed, const VerifyOptions& opt) {
  RectShape shape{opt.r, opt.s};
  for (size_t t = 0; t < kRealms.size(); ++t) {
    Realm realm = kRealms[t];
    Labeling x = random_labeling(shape, realm, split_seed(seed, t));
    Labeling y = x;
    for (int n = 0; n < opt.r + opt.s; ++n) y = rowmotion(std::move(y), Region::full());
    if (y != x)
      return TrialFailure{"rowmotion period r+s violated", fail_data(realm, x)};
  }
  return std::nullopt;
}

std::optional<TrialFailure> greene_suite(std::uint64_t seed, const VerifyOptions& opt) {
  RectShape shape{opt.r, opt.s};
  for (size_t t = 0; t < kRealms.size(); ++t) {
    Realm realm = kRealms[t];
    Labeling x = random_labeling(shape, realm, split_seed(seed, t));
    SplitMix64 rng(split_seed(seed, 10 + t));
    bool row_edge = rng.range(0, 1) == 0;
    int i = row_edge ? opt.r : static_cast<int>(rng.range(1, opt.r));
    int j = row_edge ? static_cast<int>(rng.range(1, opt.s)) : opt.s;
    for (int k = 1; k <= std::min(i, j); ++k)
      if (greene_boundary(x, i, j, k) != stat(x, 1, 1, i, j, k)) {
        json data = fail_data(realm, x);
        data["i"] = i;
        data["j"] = j;
        data["k"] = k;
        return TrialFailure{"Greene boundary sum differs from the path statistic", data};
      }
  }
  return std::nullopt;
}

std::optional<TrialFailure> chain_shifting(std::uint64_t seed, const VerifyOptions& opt) {
  if (opt.r < 2) return std::nullopt;
  RectShape shape{opt.r, opt.s};
  for (size_t t = 0; t < kRealms.size(); ++t) {
    Realm realm = kRealms[t];
    Labeling x = random_labeling(shape, realm, split_seed(seed, t));
    SplitMix64 rng(split_seed(seed, 10 + t));
    int v = static_cast<int>(rng.range(2, opt.r));
    int u = static_cast<int>(rng.range(2, v));
    std::vector<RectCoord> gens{{v - 1, opt.s}};
    if (v < opt.r && rng.range(0, 1) == 0)
      gens.push_back({static_cast<int>(rng.range(v, opt.r)),
                      static_cast<int>(rng.range(1, opt.s))});
    Region ideal = Region::ideal_of(gens);
    Labeling y = transfer(rowmotion(transfer_inverse(x), ideal, true));
    for (int k = 1; k <= std::min(v - u + 1, opt.s); ++k)
      if (stat(x, u, 1, v, opt.s, k) != stat(y, u - 1, 1, v - 1, opt.s, k)) {
        json data = fail_data(realm, x);
        data["u"] = u;
        data["v"] = v;
        data["k"] = k;
        data["ideal"] = region_str(ideal);
        return TrialFailure{"chain-shifting identity failed", data};
      }
  }
  return std::nullopt;
}

std::optional<TrialFailure> proid_rsk(std::uint64_t seed, const VerifyOptions& opt) {
  RectShape shape{opt.r, opt.s};
  for (size_t t = 0; t < kRealms.size(); ++t) {
    Realm realm = kRealms[t];
    Labeling x = random_labeling(shape, realm, split_seed(seed, t));
    SplitMix64 rng(split_seed(seed, 10 + t));
    int a = static_cast<int>(rng.range(1, opt.r));
    int b = static_cast<int>(rng.range(1, opt.s));
    Labeling lhs = rsk_ab(rsk_ab(x, a, b, true), a + 1, b);
    Labeling rhs = pro_trunc(x, Side::P, a, b);
    if (lhs != rhs) {
      json data = fail_data(realm, x);
      data["a"] = a;
      data["b"] = b;
      return TrialFailure{"rsk corner-step does not equal truncated promotion", data};
    }
  }
  return std::nullopt;
}

std::optional<TrialFailure> rsk_cancellation(std::uint64_t seed, const VerifyOptions& opt) {
  RectShape shape{opt.r, opt.s};
  for (size_t t = 0; t < kRealms.size(); ++t) {
    Realm realm = kRealms[t];
    Labeling x = random_labeling(shape, realm, split_seed(seed, t));
    SplitMix64 rng(split_seed(seed, 10 + t));
    int a = static_cast<int>(rng.range(1, opt.r + 1));
    int b = static_cast<int>(rng.range(1, opt.s + 1));
    int c = static_cast<int>(rng.range(1, opt.s + 1));
    Labeling composed = rsk_ab(rsk_ab(x, a, b, true), a, c);
    json data = fail_data(realm, x);
    data["a"] = a;
    data["b"] = b;
    data["c"] = c;
    if (c >= b) {
      Labeling chain = x;
      for (int step = b; step <= c - 1; ++step) chain = pro_trunc(chain, Side::Q, a, step);
      if (composed != chain)
        return TrialFailure{"rsk cancellation does not match the promotion chain", data};
    }
    for (RectCoord p : all_cells(shape))
      if (file_of(p) >= a - std::min(b, c) && composed.at(p) != x.at(p))
        return TrialFailure{"rsk cancellation moved a weakly-left coordinate", data};
  }
  return std::nullopt;
}

std::optional<TrialFailure> double_rsk(std::uint64_t seed, const VerifyOptions& opt) {
  RectShape shape{opt.r, opt.s};
  for (size_t t = 0; t < kRealms.size(); ++t) {
    Realm realm = kRealms[t];
    Labeling x = random_labeling(shape, realm, split_seed(seed, t));
    SplitMix64 rng(split_seed(seed, 10 + t));
    int a = static_cast<int>(rng.range(1, opt.r));
    int b = static_cast<int>(rng.range(1, opt.s + 1));
    int c = static_cast<int>(rng.range(1, opt.s + 1));
    Labeling y = rsk_ab(rsk_ab(x, a, c), a, b, true);
    int jmax = std::min({b, c, opt.s});
    for (int j = 1; j <= jmax; ++j)
      for (int l = 1; l <= j; ++l)
        for (int k = 1; k <= std::min(opt.r, j - l + 1); ++k)
          if (stat(x, 1, l, opt.r, j, k) != stat(y, 1, l, opt.r, j, k)) {
            json data = fail_data(realm, x);
            data["a"] = a;
            data["b"] = b;
            data["c"] = c;
            data["l"] = l;
            data["j"] = j;
            data["k"] = k;
            return TrialFailure{"double-rsk statistic preservation failed", data};
          }
  }
  return std::nullopt;
}

std::optional<TrialFailure> shifts_one_direction(std::uint64_t seed, const VerifyOptions& opt) {
  RectShape shape{opt.r, opt.s};
  for (size_t t = 0; t < kRealms.size(); ++t) {
    Realm realm = kRealms[t];
    Labeling x = random_labeling(shape, realm, split_seed(seed, t));
    Labeling y = omega(x);
    for (int u = 1; u <= opt.r; ++u)
      for (int v = u; v <= opt.r; ++v)
        for (int k = 1; k <= std::min(v - u + 1, opt.s); ++k)
          if (stat(x, u, 1, v, opt.s, k) != stat(y, u, 1, v, opt.s, k))
            return TrialFailure{"omega changed a row-band statistic", fail_data(realm, x)};
    for (int u = 2; u <= opt.s; ++u)
      for (int v = u; v <= opt.s; ++v)
        for (int k = 1; k <= std::min(opt.r, v - u + 1); ++k)
          if (stat(x, 1, u, opt.r, v, k) != stat(y, 1, u - 1, opt.r, v - 1, k))
            return TrialFailure{"omega column-band statistic shift failed", fail_data(realm, x)};
  }
  return std::nullopt;
}

std::optional<TrialFailure> same_p_tableaux(std::uint64_t seed, const VerifyOptions& opt) {
  RectShape shape{opt.r, opt.s};
  for (size_t t = 0; t < kRealms.size(); ++t) {
    Realm realm = kRealms[t];
    Labeling x = random_labeling(shape, realm, split_seed(seed, t));
    SplitMix64 rng(split_seed(seed, 10 + t));

    // Q-side maps fix the P-tableau; all column-window statistics must agree.
    Labeling z = rsk(x);
    Labeling zq = rng.range(0, 1) == 0 ? pro_full(z, Side::Q) : evac_full(z, Side::Q);
    Labeling y = rsk(zq, true);
    if (p_tableau(y) != p_tableau(x))
      return TrialFailure{"Q-side map altered the P-tableau", fail_data(realm, x)};
    for (int u = 1; u <= opt.s; ++u)
      for (int v = u; v <= opt.s; ++v)
        for (int k = 1; k <= std::min(opt.r, v - u + 1); ++k)
          if (stat(x, 1, u, opt.r, v, k) != stat(y, 1, u, opt.r, v, k))
            return TrialFailure{"equal P-tableaux but differing statistic", fail_data(realm, x)};

    // Perturbing a weakly-left coordinate of rsk(x) must separate some statistic.
    std::vector<RectCoord> left;
    for (RectCoord p : all_cells(shape))
      if (file_of(p) >= opt.r - opt.s) left.push_back(p);
    RectCoord p = left[rng.range(0, static_cast<int>(left.size()) - 1)];
    Labeling zp = z;
    zp.at(p) = realm == Realm::PL ? Rat(zp.at(p) + 1) : Rat(zp.at(p) * 2);
    Labeling yp = rsk(zp, true);
    bool separated = false;
    for (int u = 1; u <= opt.s && !separated; ++u)
      for (int v = u; v <= opt.s && !separated; ++v)
        for (int k = 1; k <= std::min(opt.r, v - u + 1) && !separated; ++k)
          if (stat(x, 1, u, opt.r, v, k) != stat(yp, 1, u, opt.r, v, k)) separated = true;
    if (!separated) {
      json data = fail_data(realm, x);
      data["perturbed_cell"] = {p.i, p.j};
      return TrialFailure{"differing P-tableaux but all statistics agree", data};
    }
  }
  return std::nullopt;
}

std::optional<TrialFailure> omega_uniqueness(std::uint64_t seed, const VerifyOptions& opt) {
  if (opt.s < 2) return std::nullopt;
  RectShape shape{opt.r, opt.s};
  for (size_t t = 0; t < kRealms.size(); ++t) {
    Realm realm = kRealms[t];
    Labeling x = random_labeling(shape, realm, split_seed(seed, t));
    Labeling z = rsk(omega(x));
    for (int j = 1; j <= opt.s - 1; ++j)
      for (int k = 0; k <= std::min(opt.r, j) - 1; ++k) {
        Rat expect = invert_against(realm, stat(x, 1, 2, opt.r, j + 1, k + 1),
                                    stat(x, 1, 2, opt.r, j + 1, k));
        if (z.at({opt.r - k, j - k}) != expect) {
          json data = fail_data(realm, x);
          data["j"] = j;
          data["k"] = k;
          return TrialFailure{"omega reconstruction formula failed", data};
        }
      }
  }
  return std::nullopt;
}

std::optional<TrialFailure> evac_involution(std::uint64_t seed, const VerifyOptions& opt) {
  RectShape shape{opt.r, opt.s};
  for (size_t t = 0; t < kRealms.size(); ++t) {
    Realm realm = kRealms[t];
    Labeling x = random_labeling(shape, realm, split_seed(seed, t));
    for (Side side : {Side::P, Side::Q})
      if (evac_full(evac_full(x, side), side) != x)
        return TrialFailure{"evacuation applied twice moved the labeling", fail_data(realm, x)};
  }
  return std::nullopt;
}

std::optional<TrialFailure> evac_rotation(std::uint64_t seed, const VerifyOptions& opt) {
  RectShape shape{opt.r, opt.s};
  for (size_t t = 0; t < kRealms.size(); ++t) {
    Realm realm = kRealms[t];
    Labeling x = random_labeling(shape, realm, split_seed(seed, t));
    Labeling lhs = rsk(evac_full(evac_full(rsk(x), Side::Q), Side::P), true);
    if (lhs != dual_star(x))
      return TrialFailure{"double evacuation through rsk is not 180-degree rotation",
                          fail_data(realm, x)};
  }
  return std::nullopt;
}

std::optional<TrialFailure> evac_chain_shifting(std::uint64_t seed, const VerifyOptions& opt) {
  RectShape shape{opt.r, opt.s};
  for (size_t t = 0; t < kRealms.size(); ++t) {
    Realm realm = kRealms[t];
    Labeling x = random_labeling(shape, realm, split_seed(seed, t));
    Labeling y = rsk(evac_full(rsk(x), Side::P), true);
    for (int u = 1; u <= opt.s; ++u)
      for (int k = 1; k <= std::min({opt.r, u, opt.s}); ++k)
        if (stat(x, 1, opt.s - u + 1, opt.r, opt.s, k) != stat(y, 1, 1, opt.r, u, k))
          return TrialFailure{"evacuation chain-shifting (corner form) failed",
                              fail_data(realm, x)};
    for (int u = 1; u <= opt.r; ++u)
      for (int v = u; v <= opt.r; ++v)
        for (int k = 1; k <= std::min(v - u + 1, opt.s); ++k)
          if (stat(x, u, 1, v, opt.s, k) != stat(y, u, 1, v, opt.s, k))
            return TrialFailure{"evacuation altered a row-band statistic", fail_data(realm, x)};
    for (int u = 1; u <= opt.s; ++u)
      for (int v = u; v <= opt.s; ++v)
        for (int k = 1; k <= std::min(opt.r, v - u + 1); ++k)
          if (stat(x, 1, u, opt.r, v, k) !=
              stat(y, 1, opt.s + 1 - v, opt.r, opt.s + 1 - u, k))
            return TrialFailure{"evacuation column-window reflection failed", fail_data(realm, x)};
  }
  return std::nullopt;
}

std::optional<TrialFailure> swpro_factorization(std::uint64_t seed, const VerifyOptions& opt) {
  RectShape shape{opt.r, opt.s};
  for (size_t t = 0; t < kRealms.size(); ++t) {
    Realm realm = kRealms[t];
    Labeling x = random_labeling(shape, realm, split_seed(seed, t));
    Labeling z = pro_full(x, Side::P);
    z = rowmotion(std::move(z), Region::file(opt.r - opt.s));
    z = pro_full(std::move(z), Side::Q, true);
    if (z != swpro(x))
      return TrialFailure{"swpro factorization through the shared file failed",
                          fail_data(realm, x)};
  }
  return std::nullopt;
}

std::optional<TrialFailure> swpro_conjugacy(std::uint64_t seed, const VerifyOptions& opt) {
  RectShape shape{opt.r, opt.s};
  for (size_t t = 0; t < kRealms.size(); ++t) {
    Realm realm = kRealms[t];
    Labeling x = random_labeling(shape, realm, split_seed(seed, t));
    Labeling z = big_e(big_e(x, true), false);
    if (z != x)
      return TrialFailure{"E inverse pair failed", fail_data(realm, x)};
    Labeling conj = big_e(rowmotion(big_e(x, true), Region::full(), true));
    if (conj != swpro(x))
      return TrialFailure{"swpro is not E-conjugate to inverse rowmotion", fail_data(realm, x)};
  }
  return std::nullopt;
}

std::optional<TrialFailure> e_maps(std::uint64_t seed, const VerifyOptions& opt) {
  RectShape shape{opt.r, opt.s};
  for (size_t t = 0; t < kRealms.size(); ++t) {
    Realm realm = kRealms[t];
    Labeling x = random_labeling(shape, realm, split_seed(seed, t));
    Labeling composed = evac_full(rsk(transfer(x)), Side::Q);
    if (composed != big_e(x))
      return TrialFailure{"E does not factor through rsk and evacuation", fail_data(realm, x)};
    if (opt.r == 1 && big_e(x) != x)
      return TrialFailure{"E must be the identity on one-row shapes", fail_data(realm, x)};
  }
  return std::nullopt;
}

std::optional<TrialFailure> swpro_chain_shifting(std::uint64_t seed, const VerifyOptions& opt) {
  RectShape shape{opt.r, opt.s};
  for (size_t t = 0; t < kRealms.size(); ++t) {
    Realm realm = kRealms[t];
    Labeling x = random_labeling(shape, realm, split_seed(seed, t));
    Labeling y = rsk(swpro(rsk(x)), true);
    for (int u = 2; u <= opt.s; ++u)
      for (int v = u; v <= opt.s; ++v)
        for (int k = 1; k <= std::min(opt.r, v - u + 1); ++k)
          if (stat(x, 1, u, opt.r, v, k) != stat(y, 1, u - 1, opt.r, v - 1, k))
            return TrialFailure{"swpro column-window shift failed", fail_data(realm, x)};
    for (int u = 1; u + 1 <= opt.r; ++u)
      for (int v = u; v + 1 <= opt.r; ++v)
        for (int k = 1; k <= std::min(v - u + 1, opt.s); ++k)
          if (stat(x, u, 1, v, opt.s, k) != stat(y, u + 1, 1, v + 1, opt.s, k))
            return TrialFailure{"swpro row-window shift failed", fail_data(realm, x)};
    if (opt.s >= 2) {
      Labeling lhs = rsk_ab(transfer(x), opt.r + 1, opt.s);
      Labeling rhs = rsk_ab(
          transfer(rowmotion(x, Region::principal_ideal({opt.r, opt.s - 1}), true)), opt.r,
          opt.s - 1);
      if (lhs != rhs)
        return TrialFailure{"corner-extension commuting square failed", fail_data(realm, x)};
    }
  }
  return std::nullopt;
}

std::optional<TrialFailure> plactic(std::uint64_t seed, const VerifyOptions& opt) {
  if (opt.r < 2) return std::nullopt;
  for (size_t t = 0; t < kRealms.size(); ++t) {
    Realm realm = kRealms[t];
    SplitMix64 rng(split_seed(seed, 10 + t));
    int top = static_cast<int>(rng.range(1, opt.r - 1));
    int bottom = opt.r - top;
    Labeling x1 = random_labeling({top, opt.s}, realm, split_seed(seed, 20 + t));
    Labeling x2 = random_labeling({bottom, opt.s}, realm, split_seed(seed, 30 + t));
    auto q_twin = [&](const Labeling& x, std::uint64_t salt) {
      SplitMix64 inner(salt);
      Labeling z = rsk(x);
      z = inner.range(0, 1) == 0 ? pro_full(z, Side::Q) : evac_full(z, Side::Q);
      return rsk(z, true);
    };
    Labeling x1t = q_twin(x1, split_seed(seed, 40 + t));
    Labeling x2t = q_twin(x2, split_seed(seed, 50 + t));
    if (p_tableau(x1t) != p_tableau(x1) || p_tableau(x2t) != p_tableau(x2))
      return TrialFailure{"Q-side twin construction altered a P-tableau",
                          fail_data(realm, stack(x1, x2))};
    if (p_tableau(stack(x1, x2)) != p_tableau(stack(x1t, x2t)))
      return TrialFailure{"stacking does not respect P-tableau equality",
                          fail_data(realm, stack(x1, x2))};
  }
  return std::nullopt;
}

std::optional<TrialFailure> mini_rsk(std::uint64_t seed, const VerifyOptions& opt) {
  RectShape shape{opt.r, opt.s};
  for (size_t t = 0; t < kRealms.size(); ++t) {
    Realm realm = kRealms[t];
    Labeling x = random_labeling(shape, realm, split_seed(seed, t));
    SplitMix64 rng(split_seed(seed, 10 + t));
    int a = static_cast<int>(rng.range(1, opt.r));
    int b = static_cast<int>(rng.range(1, opt.s));
    Labeling y = rsk_ab(x, a, b);
    Labeling inner = rsk(project(x, a, b));
    Labeling outer = transfer_inverse(x);
    for (RectCoord p : all_cells(shape)) {
      Rat expect = (p.i <= a && p.j <= b) ? inner.at(p) : outer.at(p);
      if (y.at(p) != expect) {
        json data = fail_data(realm, x);
        data["a"] = a;
        data["b"] = b;
        return TrialFailure{"truncated rsk does not localize to the ideal", data};
      }
    }
  }
  return std::nullopt;
}

std::optional<TrialFailure> combinatorial_compat(std::uint64_t seed, const VerifyOptions& opt) {
  RectShape shape{opt.r, opt.s};
  Labeling x = random_filter_indicator(shape, split_seed(seed, 0));
  SplitMix64 rng(split_seed(seed, 1));
  RectCoord p{static_cast<int>(rng.range(1, opt.r)), static_cast<int>(rng.range(1, opt.s))};

  Labeling y = toggle(x, p);
  Labeling flipped = x;
  flipped.at(p) = Rat(1) - flipped.at(p);
  Labeling expect = is_filter_indicator(flipped) ? flipped : x;
  if (y != expect)
    return TrialFailure{"PL toggle disagrees with the combinatorial toggle",
                        fail_data(Realm::PL, x)};
  if (!is_filter_indicator(rowmotion(x, Region::full())))
    return TrialFailure{"rowmotion left the combinatorial realm", fail_data(Realm::PL, x)};
  return std::nullopt;
}

// ---- moon-polyomino suites (PL realm) -----------------------------------

MoonPoly random_moon(SplitMix64& rng, int max_rows, int max_len) {
  int nrows = static_cast<int>(rng.range(1, max_rows));
  std::vector<int> lens;
  for (int t = 0; t < nrows; ++t) lens.push_back(static_cast<int>(rng.range(1, max_len)));
  std::sort(lens.begin(), lens.end(), std::greater<int>());

  // Nested column intervals, then unimodal row placement keeps every
  // down-diagonal an interval.
  std::vector<std::pair<int, int>> ivals;  // (start j, length)
  int start = 1;
  for (size_t t = 0; t < lens.size(); ++t) {
    if (t > 0) start += static_cast<int>(rng.range(0, lens[t - 1] - lens[t]));
    ivals.push_back({start, lens[t]});
  }
  std::deque<std::pair<int, int>> order;
  for (const auto& iv : ivals) {
    if (rng.range(0, 1) == 0)
      order.push_front(iv);
    else
      order.push_back(iv);
  }
  std::vector<RectCoord> cells;
  for (size_t row = 0; row < order.size(); ++row)
    for (int j = order[row].first; j < order[row].first + order[row].second; ++j)
      cells.push_back({static_cast<int>(row) + 1, j});
  return MoonPoly::of(std::move(cells));
}

Filling random_filling(const MoonPoly& m, SplitMix64& rng, bool integral, bool nonneg) {
  std::map<RectCoord, Rat> values;
  for (RectCoord p : m.cells) {
    long num = static_cast<long>(rng.range(nonneg ? 0 : -12, 12));
    long den = integral ? 1 : static_cast<long>(rng.range(1, 6));
    values[p] = rat(num, den);
  }
  return Filling::of(m, std::move(values));
}

std::optional<MaxRect> find_by_dims(const MoonPoly& m, int height, int width) {
  std::optional<MaxRect> found;
  for (const MaxRect& rect : maximal_rectangles(m)) {
    if (rect.height() != height || rect.width() != width) continue;
    if (found) return std::nullopt;
    found = rect;
  }
  return found;
}

bool all_dims_distinct(const MoonPoly& m) {
  std::set<std::pair<int, int>> dims;
  for (const MaxRect& rect : maximal_rectangles(m))
    if (!dims.insert({rect.height(), rect.width()}).second) return false;
  return true;
}

json fail_data_moon(const Filling& x) {
  return json{{"realm", "PL"}, {"input", filling_to_json(x)}};
}

std::optional<TrialFailure> commutation(std::uint64_t seed, const VerifyOptions&) {
  SplitMix64 rng(split_seed(seed, 0));
  MoonPoly m = random_moon(rng, 4, 4);
  if (!all_dims_distinct(m)) return std::nullopt;
  std::vector<MaxRect> rects = maximal_rectangles(m);
  if (rects.size() < 2) return std::nullopt;
  int a = static_cast<int>(rng.range(0, static_cast<int>(rects.size()) - 1));
  int b = static_cast<int>(rng.range(0, static_cast<int>(rects.size()) - 2));
  if (b >= a) ++b;
  const MaxRect r1 = rects[a], r2 = rects[b];
  RectMapKind kinds[3] = {RectMapKind::OmegaP, RectMapKind::OmegaQ, RectMapKind::RhoBoth};
  RectMapKind k1 = kinds[rng.range(0, 2)], k2 = kinds[rng.range(0, 2)];
  Filling x = random_filling(m, rng, rng.range(0, 1) == 0, false);

  try {
    Filling via1 = rect_map_shift(x, r1, k1);
    if (!all_dims_distinct(via1.poly)) return std::nullopt;
    auto r2x = find_by_dims(via1.poly, r2.height(), r2.width());
    if (!r2x) return std::nullopt;
    Filling y12 = rect_map_shift(via1, *r2x, k2);

    Filling via2 = rect_map_shift(x, r2, k2);
    if (!all_dims_distinct(via2.poly)) return std::nullopt;
    auto r1x = find_by_dims(via2.poly, r1.height(), r1.width());
    if (!r1x) return std::nullopt;
    Filling y21 = rect_map_shift(via2, *r1x, k1);

    if (y12 != y21) {
      json data = fail_data_moon(x);
      data["rect1"] = {r1.i1, r1.i2, r1.j1, r1.j2};
      data["rect2"] = {r2.i1, r2.i2, r2.j1, r2.j2};
      return TrialFailure{"rectangle maps on distinct maximal rectangles do not commute", data};
    }
  } catch (const std::invalid_argument&) {
    return std::nullopt;  // one of the shifts is illegal on this instance
  }
  return std::nullopt;
}

std::optional<TrialFailure> maptheorem_a(std::uint64_t seed, const VerifyOptions&) {
  SplitMix64 rng(split_seed(seed, 0));
  MoonPoly m = random_moon(rng, 3, 4);
  if (!all_dims_distinct(m)) return std::nullopt;
  Filling x = random_filling(m, rng, rng.range(0, 1) == 0, true);
  MoonPoly n = straighten(m).result;
  Filling y = omega_path(x, n);
  for (const MaxRect& rect : maximal_rectangles(m)) {
    auto image = find_by_dims(n, rect.height(), rect.width());
    if (!image) return std::nullopt;
    for (int d = 1; d <= std::min(rect.height(), rect.width()); ++d)
      if (rect_chain_max(x, rect, d) != rect_chain_max(y, *image, d)) {
        json data = fail_data_moon(x);
        data["rect"] = {rect.i1, rect.i2, rect.j1, rect.j2};
        data["d"] = d;
        return TrialFailure{"transported filling changed a rectangle chain statistic", data};
      }
  }
  return std::nullopt;
}

std::optional<TrialFailure> se_chain(std::uint64_t seed, const VerifyOptions&) {
  SplitMix64 rng(split_seed(seed, 0));
  MoonPoly m = random_moon(rng, 3, 4);
  Filling x = random_filling(m, rng, true, true);
  int before = se_chain_max(x);  // internal cross-check runs here
  Filling y = omega_path(x, straighten(m).result);
  if (se_chain_max(y) != before) {
    json data = fail_data_moon(x);
    data["before"] = before;
    return TrialFailure{"southeast chain statistic not preserved by the transport", data};
  }
  return std::nullopt;
}

std::optional<TrialFailure> straighten_confluence(std::uint64_t seed, const VerifyOptions&) {
  SplitMix64 rng(split_seed(seed, 0));
  MoonPoly m = random_moon(rng, 4, 4);
  Straightening canonical = straighten(m);
  MoonPoly target = partition_poly(canonical.lambda);

  MoonPoly cur = m;
  for (int iter = 0; iter < 200; ++iter) {
    if (normalized(cur) == target) return std::nullopt;
    std::vector<MoonPoly> nexts;
    for (const MaxRect& rect : maximal_rectangles(cur))
      for (ShiftAxis axis : {ShiftAxis::DownDiagonals, ShiftAxis::UpDiagonals}) {
        ShiftStep step{rect, axis};
        if (!shift_legal(cur, step)) continue;
        MoonPoly next = apply_shift(cur, step);
        if (!(next == cur)) nexts.push_back(std::move(next));
      }
    if (nexts.empty())
      return TrialFailure{"random shift order got stuck before the partition",
                          json{{"poly", moon_to_json(cur)}}};
    cur = nexts[rng.range(0, static_cast<int>(nexts.size()) - 1)];
  }
  return TrialFailure{"random shift order did not terminate", json{{"poly", moon_to_json(m)}}};
}

std::optional<TrialFailure> ehrhart_suite(std::uint64_t seed, const VerifyOptions&) {
  SplitMix64 rng(split_seed(seed, 0));
  MoonPoly m = random_moon(rng, 3, 3);
  if (m.size() > 6) return std::nullopt;
  MoonPoly n = straighten(m).result;
  for (int k = 0; k <= 2; ++k) {
    Int fast = count_dilate(m, k);
    Int oracle = count_dilate_oracle(m, k);
    Int oracle_n = count_dilate_oracle(n, k);
    if (fast != oracle || oracle != oracle_n) {
      json data{{"poly", moon_to_json(m)}, {"k", k}};
      return TrialFailure{"dilate counts disagree between fast path and oracle", data};
    }
  }
  // The transport is a bijection on lattice points of the k-dilate.
  int k = 2;
  std::set<std::string> images;
  for (const Filling& f : enumerate_dilate(m, k)) {
    Filling g = omega_path(f, n);
    if (!g.integral() || ne_chain_max(g, 1) > k)
      return TrialFailure{"transport left the dilate lattice", fail_data_moon(f)};
    images.insert(filling_to_json(g).dump());
  }
  std::set<std::string> expect;
  for (const Filling& f : enumerate_dilate(n, k)) expect.insert(filling_to_json(f).dump());
  if (images != expect)
    return TrialFailure{"transport is not a bijection on dilate lattice points",
                        json{{"poly", moon_to_json(m)}, {"k", k}}};
  return std::nullopt;
}

const std::map<std::string, Suite>& registry() {
  static const std::map<std::string, Suite> suites = {
      {"toggle-involution", toggle_involution},
      {"toggle-commutation", toggle_commutation},
      {"phi-roundtrip", phi_roundtrip},
      {"rsk-roundtrip", rsk_roundtrip},
      {"rowmotion-period", rowmotion_period},
      {"greene", greene_suite},
      {"chain-shifting", chain_shifting},
      {"proid-rsk", proid_rsk},
      {"rsk-cancellation", rsk_cancellation},
      {"double-rsk", double_rsk},
      {"shifts-one-direction", shifts_one_direction},
      {"same-p-tableaux", same_p_tableaux},
      {"omega-uniqueness", omega_uniqueness},
      {"evac-involution", evac_involution},
      {"evac-rotation", evac_rotation},
      {"evac-chain-shifting", evac_chain_shifting},
      {"swpro-factorization", swpro_factorization},
      {"swpro-conjugacy", swpro_conjugacy},
      {"e-maps", e_maps},
      {"swpro-chain-shifting", swpro_chain_shifting},
      {"plactic", plactic},
      {"mini-rsk", mini_rsk},
      {"combinatorial-compat", combinatorial_compat},
      {"commutation", commutation},
      {"maptheorem-a", maptheorem_a},
      {"se-chain", se_chain},
      {"straighten-confluence", straighten_confluence},
      {"ehrhart", ehrhart_suite},
  };
  return suites;
}

}  // namespace

std::vector<std::string> verify_property_names() {
  std::vector<std::string> names;
  for (const auto& [name, suite] : registry()) names.push_back(name);
  return names;
}

VerifyResult run_verify(const std::string& property, const VerifyOptions& opt) {
  auto it = registry().find(property);
  if (it == registry().end())
    throw std::invalid_argument("unknown property: " + property);

  VerifyResult result;
  result.property = property;
  result.options = opt;
  result.counterexample = nullptr;
  for (int trial = 0; trial < opt.trials; ++trial) {
    std::uint64_t trial_seed = split_seed(opt.seed, static_cast<std::uint64_t>(trial));
    result.trial_seeds.push_back(trial_seed);
    ++result.trials_run;
    std::optional<TrialFailure> failure;
    try {
      failure = it->second(trial_seed, opt);
    } catch (const std::exception& e) {
      failure = TrialFailure{std::string("exception: ") + e.what(), json::object()};
    }
    if (failure) {
      result.ok = false;
      result.failure_message = failure->message;
      result.counterexample = failure->data;
      result.counterexample["trial"] = trial;
      result.counterexample["trial_seed"] = trial_seed;
      break;
    }
  }
  return result;
}

nlohmann::json verify_result_to_json(const VerifyResult& res) {
  json j{{"property", res.property},
         {"trials", res.options.trials},
         {"trials_run", res.trials_run},
         {"seed", res.options.seed},
         {"shape", {{"r", res.options.r}, {"s", res.options.s}}},
         {"ok", res.ok},
         {"trial_seeds", res.trial_seeds}};
  if (!res.ok) {
    j["failure"] = res.failure_message;
    j["counterexample"] = res.counterexample;
  }
  return j;
}

}  // namespace togglekit
