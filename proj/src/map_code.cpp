#include "amphichiral/map_code.hpp"

#include <algorithm>

namespace amphi {

namespace {

std::vector<int> inverse(const std::vector<int>& perm) {
  std::vector<int> inv(perm.size());
  for (std::size_t i = 0; i < perm.size(); ++i) inv[perm[i]] = static_cast<int>(i);
  return inv;
}

// Encodes with a caller-supplied rotation so the inverse is computed once.
MapCode encode_with(const RotationMap& map, const std::vector<int>& rot,
                    int start, std::vector<int>* order) {
  const int n = map.dart_count();
  std::vector<int> number(n, -1);
  std::vector<int> seq;
  seq.reserve(n);
  number[start] = 0;
  seq.push_back(start);
  for (std::size_t head = 0; head < seq.size(); ++head) {
    const int d = seq[head];
    for (int nb : {rot[d], map.alpha[d]}) {
      if (number[nb] < 0) {
        number[nb] = static_cast<int>(seq.size());
        seq.push_back(nb);
      }
    }
  }
  MapCode code;
  code.reserve(3 * seq.size() + 1);
  code.push_back(static_cast<int>(seq.size()));
  for (int d : seq) {
    code.push_back(map.label.empty() ? 0 : map.label[d]);
    code.push_back(number[rot[d]]);
    code.push_back(number[map.alpha[d]]);
  }
  if (order) *order = std::move(seq);
  return code;
}

}  // namespace

bool is_connected(const RotationMap& map);

MapCode encode_map(const RotationMap& map, int start, bool reflected,
                   std::vector<int>* order) {
  if (!reflected) return encode_with(map, map.sigma, start, order);
  return encode_with(map, inverse(map.sigma), start, order);
}

namespace {

// Streams the encoding rooted at `start` and compares it with `best` as it
// goes, giving up as soon as it is known to be larger. Returns true (and
// replaces `best`) if the new code is smaller. Only valid for connected maps,
// where every code has the same length.
bool improve(const RotationMap& map, const std::vector<int>& rot, int start, MapCode& best,
             std::vector<int>& number, std::vector<int>& seq) {
  const int n = map.dart_count();
  std::fill(number.begin(), number.end(), -1);
  seq.clear();
  number[start] = 0;
  seq.push_back(start);
  bool smaller = best.empty();
  if (smaller) best.assign(3 * n + 1, 0);
  best[0] = n;
  std::size_t pos = 1;
  auto emit = [&](int value) {
    if (!smaller) {
      if (value > best[pos]) return false;
      if (value < best[pos]) smaller = true;
    }
    if (smaller) best[pos] = value;
    ++pos;
    return true;
  };
  for (std::size_t head = 0; head < seq.size(); ++head) {
    const int d = seq[head];
    for (int nb : {rot[d], map.alpha[d]})
      if (number[nb] < 0) {
        number[nb] = static_cast<int>(seq.size());
        seq.push_back(nb);
      }
    if (!emit(map.label.empty() ? 0 : map.label[d]) || !emit(number[rot[d]]) || !emit(number[map.alpha[d]]))
      return false;
  }
  return smaller;
}

}  // namespace

CanonicalForm canonical_form(const RotationMap& map, bool allow_reflection) {
  CanonicalForm best;
  const int n = map.dart_count();
  if (n == 0) return best;
  const std::vector<int> inv = inverse(map.sigma);
  if (!is_connected(map)) {
    for (int pass = 0; pass < (allow_reflection ? 2 : 1); ++pass)
      for (int s = 0; s < n; ++s) {
        MapCode code = encode_with(map, pass == 0 ? map.sigma : inv, s, nullptr);
        if (best.start < 0 || code < best.code) best = {std::move(code), s, pass == 1};
      }
    return best;
  }
  // Only darts carrying the least label can start a least code.
  const int least = map.label.empty() ? 0 : *std::min_element(map.label.begin(), map.label.end());
  std::vector<int> number(n), seq;
  seq.reserve(n);
  for (int pass = 0; pass < (allow_reflection ? 2 : 1); ++pass) {
    const std::vector<int>& rot = pass == 0 ? map.sigma : inv;
    for (int s = 0; s < n; ++s) {
      if (!map.label.empty() && map.label[s] != least) continue;
      if (improve(map, rot, s, best.code, number, seq)) {
        best.start = s;
        best.reflected = pass == 1;
      }
    }
  }
  return best;
}

std::optional<MapIsomorphism> map_isomorphism(const RotationMap& a,
                                              const RotationMap& b,
                                              bool allow_reflection) {
  if (a.dart_count() != b.dart_count()) return std::nullopt;
  if (a.dart_count() == 0) return MapIsomorphism{};
  std::vector<int> order_a;
  const MapCode code_a = encode_map(a, 0, false, &order_a);
  const std::vector<int> inv_b = inverse(b.sigma);
  for (int pass = 0; pass < (allow_reflection ? 2 : 1); ++pass) {
    const std::vector<int>& rot = pass == 0 ? b.sigma : inv_b;
    for (int s = 0; s < b.dart_count(); ++s) {
      std::vector<int> order_b;
      if (encode_with(b, rot, s, &order_b) != code_a) continue;
      MapIsomorphism iso;
      iso.reflected = pass == 1;
      iso.dart_map.assign(a.dart_count(), -1);
      for (std::size_t i = 0; i < order_a.size(); ++i) iso.dart_map[order_a[i]] = order_b[i];
      return iso;
    }
  }
  return std::nullopt;
}

bool is_connected(const RotationMap& map) {
  const int n = map.dart_count();
  if (n == 0) return true;
  std::vector<int> order;
  encode_map(map, 0, false, &order);
  return static_cast<int>(order.size()) == n;
}

}  // namespace amphi
