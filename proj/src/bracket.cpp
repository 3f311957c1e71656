#include "amphichiral/bracket.hpp"

#include <algorithm>
#include <bit>
#include <sstream>
#include <thread>

#include "amphichiral/error.hpp"

namespace amphi {

namespace {

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw Error(ErrorKind::CapExceeded, "polynomial coefficient overflow");
  return r;
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw Error(ErrorKind::CapExceeded, "polynomial coefficient overflow");
  return r;
}

}  // namespace

LaurentPoly LaurentPoly::monomial(std::int64_t coeff, int exponent) {
  LaurentPoly p;
  p.add_term(exponent, coeff);
  return p;
}

std::int64_t LaurentPoly::coeff(int exponent) const {
  auto it = terms_.find(exponent);
  return it == terms_.end() ? 0 : it->second;
}

void LaurentPoly::add_term(int exponent, std::int64_t coeff) {
  if (coeff == 0) return;
  auto [it, fresh] = terms_.emplace(exponent, coeff);
  if (fresh) return;
  it->second = checked_add(it->second, coeff);
  if (it->second == 0) terms_.erase(it);
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& other) {
  for (auto [e, c] : other.terms_) add_term(e, c);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& other) {
  for (auto [e, c] : other.terms_) add_term(e, checked_mul(c, -1));
  return *this;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  LaurentPoly r;
  for (auto [ea, ca] : a.terms_)
    for (auto [eb, cb] : b.terms_) r.add_term(ea + eb, checked_mul(ca, cb));
  return r;
}

LaurentPoly LaurentPoly::pow(int n) const {
  if (n < 0) throw Error(ErrorKind::InvalidArgument, "negative power of a polynomial");
  LaurentPoly r = constant(1);
  for (int i = 0; i < n; ++i) r = r * *this;
  return r;
}

LaurentPoly LaurentPoly::inverted() const {
  LaurentPoly r;
  for (auto [e, c] : terms_) r.terms_.emplace(-e, c);
  return r;
}

std::string LaurentPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto [e, c] : terms_) {
    if (first)
      os << c;
    else
      os << (c < 0 ? " - " : " + ") << (c < 0 ? -c : c);
    os << "*A^" << e;
    first = false;
  }
  return os.str();
}

std::string LaurentPoly::to_json() const {
  std::ostringstream os;
  os << '{';
  bool first = true;
  for (auto [e, c] : terms_) {
    if (!first) os << ',';
    os << '"' << e << "\":" << c;
    first = false;
  }
  os << '}';
  return os.str();
}

namespace {

// Number of closed curves after smoothing every crossing; bit c of `state`
// selects the B-smoothing at crossing c.
int loop_count(const Diagram& d, std::uint32_t state, std::vector<int>& mate, std::vector<char>& seen) {
  const int n = d.crossing_count();
  for (int c = 0; c < n; ++c) {
    const int o = d.over_parity(c);
    // A joins the arcs around the B-corners (o+1, o+3), B around the A-corners.
    const int shift = (state >> c & 1) ? 0 : 1;
    const int p = dart::make(c, o + shift), q = dart::make(c, o + shift + 1);
    const int r = dart::make(c, o + shift + 2), s = dart::make(c, o + shift + 3);
    mate[p] = q;
    mate[q] = p;
    mate[r] = s;
    mate[s] = r;
  }
  std::fill(seen.begin(), seen.end(), 0);
  int loops = 0;
  for (int x = 0; x < d.dart_count(); ++x) {
    if (seen[x]) continue;
    ++loops;
    int y = x;
    do {
      seen[y] = 1;
      const int z = d.partner(y);
      seen[z] = 1;
      y = mate[z];
    } while (y != x);
  }
  return loops;
}

}  // namespace

LaurentPoly bracket(const Diagram& d, int threads) {
  const int n = d.crossing_count();
  if (n > kBracketCrossingCap)
    throw Error(ErrorKind::CapExceeded, "bracket state sum is capped at " + std::to_string(kBracketCrossingCap) +
                                            " crossings, got " + std::to_string(n));
  if (n == 0) return LaurentPoly::constant(1);

  // tally[b][loops]: states with b B-smoothings and the given loop count.
  const int max_loops = n + 2;
  using Tally = std::vector<std::int64_t>;
  auto index = [&](int b, int loops) { return b * (max_loops + 1) + loops; };
  const std::uint64_t total = std::uint64_t{1} << n;
  const int workers = static_cast<int>(std::clamp<std::uint64_t>(threads < 1 ? 1 : threads, 1, total));
  std::vector<Tally> tallies(workers, Tally((n + 1) * (max_loops + 1), 0));
  auto run = [&](int w) {
    std::vector<int> mate(d.dart_count());
    std::vector<char> seen(d.dart_count());
    for (std::uint64_t s = w; s < total; s += workers) {
      const auto state = static_cast<std::uint32_t>(s);
      ++tallies[w][index(std::popcount(state), loop_count(d, state, mate, seen))];
    }
  };
  if (workers == 1) {
    run(0);
  } else {
    std::vector<std::thread> pool;
    for (int w = 0; w < workers; ++w) pool.emplace_back(run, w);
    for (auto& t : pool) t.join();
  }

  const LaurentPoly delta = LaurentPoly::monomial(-1, 2) + LaurentPoly::monomial(-1, -2);
  std::vector<LaurentPoly> delta_pow{LaurentPoly::constant(1)};
  LaurentPoly result;
  for (int b = 0; b <= n; ++b)
    for (int loops = 1; loops <= max_loops; ++loops) {
      std::int64_t count = 0;
      for (const auto& t : tallies) count += t[index(b, loops)];
      if (count == 0) continue;
      while (static_cast<int>(delta_pow.size()) < loops) delta_pow.push_back(delta_pow.back() * delta);
      result += LaurentPoly::monomial(count, (n - b) - b) * delta_pow[loops - 1];
    }
  return result;
}

int writhe(const Diagram& d, const std::vector<bool>& reverse) {
  const auto comps = components(d);
  if (!reverse.empty() && reverse.size() != comps.size())
    throw Error(ErrorKind::InvalidArgument, "orientation vector must have one entry per component");
  // outgoing[x] is set when the oriented strand leaves its crossing at dart x.
  std::vector<char> outgoing(d.dart_count(), 0);
  for (std::size_t i = 0; i < comps.size(); ++i)
    for (int x : comps[i]) outgoing[!reverse.empty() && reverse[i] ? d.partner(x) : x] = 1;
  int w = 0;
  for (int c = 0; c < d.crossing_count(); ++c) {
    const int o = d.over_parity(c);
    const int over_out = outgoing[dart::make(c, o)] ? o : o + 2;
    const int under_out = outgoing[dart::make(c, o + 1)] ? o + 1 : o + 3;
    w += ((under_out - over_out) & 3) == 1 ? 1 : -1;
  }
  return w;
}

LaurentPoly normalized(const Diagram& d, const std::vector<bool>& reverse, int threads) {
  const int w = writhe(d, reverse);
  const std::int64_t sign = (w & 1) ? -1 : 1;
  return LaurentPoly::monomial(sign, -3 * w) * bracket(d, threads);
}

bool mirror_symmetric(const Diagram& d, int threads) {
  const LaurentPoly p = normalized(d, {}, threads);
  return p == p.inverted();
}

}  // namespace amphi
