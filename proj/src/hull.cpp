#include <aptile/hull.hpp>

#include <algorithm>
#include <map>
#include <mutex>
#include <stdexcept>
#include <utility>

namespace aptile {

namespace {

constexpr long kIndexCap = 50000000;       // vertex indices a source will expand to
constexpr std::size_t kListCap = 400000;   // vertices examined per metric probe

QuadraticNumber int_pair_value(const Int& a, const Int& b, const QuadraticNumber& theta) {
  return QuadraticNumber(a) + QuadraticNumber(b) * theta;
}

}  // namespace

QuadraticNumber Patch::lo() const {
  if (tiles.empty()) throw std::logic_error("empty patch has no endpoints");
  return tiles.front().left;
}

QuadraticNumber Patch::hi() const {
  if (tiles.empty()) throw std::logic_error("empty patch has no endpoints");
  return tiles.back().right();
}

namespace detail {

// Gap tiling of a cut-and-project scheme: vertex k is the k-th projected
// staircase point, and the tile between vertices k and k+1 carries label 1
// when the gap is alpha (the lattice step raised the height) and 0 when it
// is 1.
class CpsTilingSource final : public TilingSource {
 public:
  explicit CpsTilingSource(const CutProjectScheme& scheme) : scheme_(scheme) {}

  std::size_t alphabet_size() const override { return 2; }
  char letter(int label) const override { return label == 0 ? '0' : '1'; }
  std::vector<QuadraticNumber> lengths() const override {
    return {QuadraticNumber(1), scheme_.alpha};
  }
  QuadraticNumber vertex(const Int& k) const override {
    return position(scheme_, vertex_at(scheme_, k));
  }
  int label(const Int& k) const override {
    Int k1 = k + 1;
    return vertex_at(scheme_, k1).j - vertex_at(scheme_, k).j == 1 ? 1 : 0;
  }
  std::optional<Branch> singular_tag() const override {
    if (is_singular(scheme_.alpha, scheme_.rho)) return word_branch(scheme_.window);
    return std::nullopt;
  }

 private:
  CutProjectScheme scheme_;
};

// Two-sided fixed-point tiling of a primitive rule with exact tile lengths.
// The words to the left and right of the seam are grown on demand by
// reapplying the fixing power of the rule; nesting of the iterated images
// keeps previously handed-out prefixes (and their cached vertex sums) valid.
class SubstitutionTilingSource final : public TilingSource {
 public:
  SubstitutionTilingSource(const SubstitutionRule& rule, char left_seed, char right_seed)
      : rule_(rule) {
    if (!is_primitive(rule_).first)
      throw std::domain_error("substitution tiling requires a primitive rule");
    PerronData pd = perron(rule_);
    if (!pd.exact)
      throw std::domain_error(
          "substitution tiling requires exact eigenvalue data (alphabets of at most two letters)");
    lengths_ = pd.lengths;

    const int lx = rule_.index_of(left_seed);
    const int ry = rule_.index_of(right_seed);
    const std::size_t cap = rule_.letters() * rule_.letters() + rule_.letters();
    int last = lx, first = ry;
    for (std::size_t p = 1; p <= cap; ++p) {
      last = rule_.images[static_cast<std::size_t>(last)].back();
      first = rule_.images[static_cast<std::size_t>(first)].front();
      if (last == lx && first == ry) {
        power_ = static_cast<unsigned>(p);
        break;
      }
    }
    if (power_ == 0)
      throw std::domain_error("seed letters do not both recur at the seam under any small power");
    if (language_factors(rule_, 2).count({lx, ry}) == 0)
      throw std::domain_error("seed pair is not a legal 2-factor of the substitution language");

    right_ = {ry};
    left_rev_ = {lx};
    rsum_ = {QuadraticNumber(0)};
    lsum_ = {QuadraticNumber(0)};
  }

  std::size_t alphabet_size() const override { return rule_.letters(); }
  char letter(int label) const override {
    return rule_.alphabet[static_cast<std::size_t>(label)];
  }
  std::vector<QuadraticNumber> lengths() const override { return lengths_; }

  QuadraticNumber vertex(const Int& k) const override {
    std::lock_guard<std::mutex> lock(mu_);
    long kk = checked_index(k);
    if (kk >= 0) {
      ensure_right(static_cast<std::size_t>(kk));
      return rsum_[static_cast<std::size_t>(kk)];
    }
    ensure_left(static_cast<std::size_t>(-kk));
    return lsum_[static_cast<std::size_t>(-kk)];
  }

  int label(const Int& k) const override {
    std::lock_guard<std::mutex> lock(mu_);
    long kk = checked_index(k);
    if (kk >= 0) {
      ensure_right(static_cast<std::size_t>(kk) + 1);
      return right_[static_cast<std::size_t>(kk)];
    }
    ensure_left(static_cast<std::size_t>(-kk));
    return left_rev_[static_cast<std::size_t>(-kk) - 1];
  }

  std::optional<Branch> singular_tag() const override { return std::nullopt; }

 private:
  static long checked_index(const Int& k) {
    if (!fits_long(k) || k > Int(kIndexCap) || k < Int(-kIndexCap))
      throw std::overflow_error("substitution tiling query too far from the origin");
    return k.get_si();
  }

  void ensure_right(std::size_t n) const {  // caller holds mu_
    int stalls = 0;
    while (right_.size() < n) {
      Word w;
      w.symbols = right_;
      w = apply(rule_, w, power_);
      if (w.symbols.size() <= right_.size() && ++stalls > 64)
        throw std::logic_error("substitution fails to expand its right seed");
      right_ = std::move(w.symbols);
    }
    while (rsum_.size() <= right_.size()) {
      std::size_t m = rsum_.size() - 1;
      rsum_.push_back(rsum_.back() + lengths_[static_cast<std::size_t>(right_[m])]);
    }
  }

  void ensure_left(std::size_t n) const {  // caller holds mu_
    int stalls = 0;
    while (left_rev_.size() < n) {
      Word w;
      w.symbols.assign(left_rev_.rbegin(), left_rev_.rend());
      w = apply(rule_, w, power_);
      if (w.symbols.size() <= left_rev_.size() && ++stalls > 64)
        throw std::logic_error("substitution fails to expand its left seed");
      left_rev_.assign(w.symbols.rbegin(), w.symbols.rend());
    }
    while (lsum_.size() <= left_rev_.size()) {
      std::size_t m = lsum_.size() - 1;
      lsum_.push_back(lsum_.back() - lengths_[static_cast<std::size_t>(left_rev_[m])]);
    }
  }

  SubstitutionRule rule_;
  unsigned power_ = 0;
  std::vector<QuadraticNumber> lengths_;
  mutable std::mutex mu_;
  mutable std::vector<int> right_;     // labels of tiles 0, 1, 2, ...
  mutable std::vector<int> left_rev_;  // labels of tiles -1, -2, ...
  mutable std::vector<QuadraticNumber> rsum_;  // rsum_[m] = vertex m
  mutable std::vector<QuadraticNumber> lsum_;  // lsum_[m] = vertex -m
};

}  // namespace detail

Tiling::Tiling(std::shared_ptr<const detail::TilingSource> source, QuadraticNumber shift)
    : source_(std::move(source)), shift_(std::move(shift)) {}

Tiling Tiling::from_cps(const CutProjectScheme& scheme) {
  return Tiling(std::make_shared<detail::CpsTilingSource>(scheme), QuadraticNumber(0));
}

Tiling Tiling::from_substitution(const SubstitutionRule& rule, std::pair<char, char> seeds) {
  return Tiling(
      std::make_shared<detail::SubstitutionTilingSource>(rule, seeds.first, seeds.second),
      QuadraticNumber(0));
}

Tiling Tiling::from_substitution(const SubstitutionRule& rule) {
  if (!is_primitive(rule).first)
    throw std::domain_error("substitution tiling requires a primitive rule");
  auto legal = language_factors(rule, 2);
  const std::size_t k = rule.letters();
  for (std::size_t p = 1; p <= k * k + k; ++p) {
    for (std::size_t x = 0; x < k; ++x) {
      int last = static_cast<int>(x);
      for (std::size_t i = 0; i < p; ++i) last = rule.images[static_cast<std::size_t>(last)].back();
      if (last != static_cast<int>(x)) continue;
      for (std::size_t y = 0; y < k; ++y) {
        int first = static_cast<int>(y);
        for (std::size_t i = 0; i < p; ++i)
          first = rule.images[static_cast<std::size_t>(first)].front();
        if (first != static_cast<int>(y)) continue;
        if (legal.count({static_cast<int>(x), static_cast<int>(y)}) == 0) continue;
        return from_substitution(rule, {rule.alphabet[x], rule.alphabet[y]});
      }
    }
  }
  throw std::domain_error("substitution admits no legal two-sided seed pair");
}

std::size_t Tiling::alphabet_size() const { return source_->alphabet_size(); }
char Tiling::letter(int label) const { return source_->letter(label); }
std::vector<QuadraticNumber> Tiling::lengths() const { return source_->lengths(); }
std::optional<Branch> Tiling::singular_tag() const { return source_->singular_tag(); }

QuadraticNumber Tiling::vertex(const Int& k) const { return source_->vertex(k) + shift_; }
int Tiling::label(const Int& k) const { return source_->label(k); }

Int Tiling::tile_index_at(const QuadraticNumber& pos) const {
  Int klo, khi;  // invariant afterwards: vertex(klo) <= pos < vertex(khi)
  if (vertex(Int(0)) <= pos) {
    Int step(1);
    while (vertex(step) <= pos) step *= 2;
    klo = step == 1 ? Int(0) : Int(step / 2);
    khi = step;
  } else {
    Int step(1);
    while (vertex(Int(-step)) > pos) step *= 2;
    khi = step == 1 ? Int(0) : Int(-(step / 2));
    klo = -step;
  }
  while (khi - klo > 1) {
    Int mid = fdiv(klo + khi, Int(2));
    if (vertex(mid) <= pos)
      klo = mid;
    else
      khi = mid;
  }
  return klo;
}

Tile Tiling::tile_at(const QuadraticNumber& pos) const {
  Int k = tile_index_at(pos);
  QuadraticNumber left = vertex(k);
  return Tile{label(k), left, vertex(k + 1) - left};
}

QuadraticNumber Tiling::origin_offset() const {
  return QuadraticNumber(0) - vertex(tile_index_at(QuadraticNumber(0)));
}

Tiling translate(const Tiling& t, const QuadraticNumber& x) {
  return Tiling(t.source_, t.shift_ + x);
}

Tiling tiling_from_cps(const CutProjectScheme& scheme) { return Tiling::from_cps(scheme); }

Patch window(const Tiling& t, const QuadraticNumber& lo, const QuadraticNumber& hi) {
  if (lo > hi) throw std::invalid_argument("window: lo exceeds hi");
  Int k0 = t.tile_index_at(lo);
  if (t.vertex(k0) == lo) k0 -= 1;  // the tile ending at lo touches the interval
  Int k1 = t.tile_index_at(hi);
  if (!fits_long(Int(k1 - k0)) || Int(k1 - k0) > Int(5000000))
    throw std::overflow_error("window spans too many tiles");
  Patch out;
  for (Int k = k0; k <= k1; k += 1) {
    QuadraticNumber left = t.vertex(k);
    out.tiles.push_back(Tile{t.label(k), left, t.vertex(k + 1) - left});
  }
  return out;
}

namespace {

// One-dimensional feasibility domain: a closed base interval sharpened by
// optional strict bounds.
struct XRange {
  QuadraticNumber lo, hi;
  bool lo_strict = false, hi_strict = false;
  bool empty = false;

  void clip_lo(const QuadraticNumber& v, bool strict) {
    if (empty) return;
    if (v > lo || (v == lo && strict && !lo_strict)) {
      lo = v;
      lo_strict = strict;
    }
  }
  void clip_hi(const QuadraticNumber& v, bool strict) {
    if (empty) return;
    if (v < hi || (v == hi && strict && !hi_strict)) {
      hi = v;
      hi_strict = strict;
    }
  }
  bool feasible() const {
    if (empty) return false;
    if (lo < hi) return true;
    return lo == hi && !lo_strict && !hi_strict;
  }
};

struct VertexEntry {
  Int k;
  QuadraticNumber pos;
};

std::vector<VertexEntry> vertices_between(const Tiling& t, const QuadraticNumber& lo,
                                          const QuadraticNumber& hi) {
  std::vector<VertexEntry> out;
  Int k = t.tile_index_at(lo);
  if (t.vertex(k) < lo) k += 1;
  while (true) {
    QuadraticNumber p = t.vertex(k);
    if (p > hi) break;
    out.push_back(VertexEntry{k, p});
    if (out.size() > kListCap)
      throw std::overflow_error("metric probe too fine: vertex window exceeds the cap");
    k += 1;
  }
  return out;
}

// Whether some x with |x| <= eps/2 places the ball of radius 1/eps strictly
// inside a single tile of t, for each label; used for the vertex-free branch
// of the feasibility test.
std::vector<char> single_tile_labels(const Tiling& t, const QuadraticNumber& inv,
                                     const QuadraticNumber& half,
                                     const QuadraticNumber& reach) {
  std::vector<char> ok(t.alphabet_size(), 0);
  Int k = t.tile_index_at(-reach);
  while (true) {
    QuadraticNumber left = t.vertex(k);
    if (left > reach) break;
    QuadraticNumber right = t.vertex(k + 1);
    XRange r{-half, half};
    r.clip_lo(inv - right, false);   // ball's right edge not past the tile's
    r.clip_hi(-inv - left, false);   // ball's left edge not before the tile's
    if (r.feasible()) ok[static_cast<std::size_t>(t.label(k))] = 1;
    k += 1;
  }
  return ok;
}

}  // namespace

bool metric_feasible(const Tiling& t1, const Tiling& t2, const QuadraticNumber& eps) {
  if (eps.sign() <= 0) throw std::domain_error("metric scale must be positive");
  if (t1.alphabet_size() != t2.alphabet_size())
    throw std::domain_error("metric compares tilings over a common alphabet");
  {
    // Fail fast on mixed quadratic fields: combining the data throws.
    QuadraticNumber probe = t1.vertex(Int(0)) - t2.vertex(Int(0));
    for (const QuadraticNumber& l : t1.lengths()) probe += l;
    for (const QuadraticNumber& l : t2.lengths()) probe -= l;
    probe += eps;
  }

  const QuadraticNumber inv = QuadraticNumber(1) / eps;
  const QuadraticNumber half = eps / QuadraticNumber(2);
  const QuadraticNumber ball_reach = inv + half;  // window edges stay within this

  // Vertex-free branch: the ball sits inside one tile of each tiling, with
  // a common label (the two shifts are independent).
  {
    QuadraticNumber maxlen(0);
    for (const QuadraticNumber& l : t1.lengths()) maxlen = std::max(maxlen, l);
    for (const QuadraticNumber& l : t2.lengths()) maxlen = std::max(maxlen, l);
    std::vector<char> a = single_tile_labels(t1, inv, half, ball_reach + maxlen);
    std::vector<char> b = single_tile_labels(t2, inv, half, ball_reach + maxlen);
    for (std::size_t l = 0; l < a.size(); ++l)
      if (a[l] && b[l]) return true;
  }

  // Vertex-aligned branch: any agreement on a ball whose interior contains a
  // vertex pins the relative shift y to a difference of vertex positions,
  // |y| <= eps.  The same y can have several disjoint agreement islands, so
  // every near pair is walked, memoizing islands already explored.
  const QuadraticNumber list_reach = ball_reach + eps + QuadraticNumber(1);
  std::vector<VertexEntry> va = vertices_between(t1, -list_reach, list_reach);
  std::vector<VertexEntry> vb = vertices_between(t2, -list_reach, list_reach);
  const QuadraticNumber walk_hi = ball_reach + QuadraticNumber(1);
  const QuadraticNumber walk_lo = -walk_hi;
  std::map<QuadraticNumber, std::vector<std::pair<QuadraticNumber, QuadraticNumber>>> explored;

  std::size_t jlo = 0;
  for (const VertexEntry& a : va) {
    while (jlo < vb.size() && vb[jlo].pos < a.pos - eps) ++jlo;
    for (std::size_t j = jlo; j < vb.size() && vb[j].pos <= a.pos + eps; ++j) {
      const QuadraticNumber y = a.pos - vb[j].pos;
      auto& islands = explored[y];
      bool seen = false;
      for (const auto& island : islands) {
        if (island.first <= a.pos && a.pos <= island.second) {
          seen = true;
          break;
        }
      }
      if (seen) continue;

      // Maximal agreement of t1 and t2 + y around the aligned pair, walking
      // tile by tile.  Agreement is closed: past the last matched vertex it
      // still extends through the shorter of two same-label tiles whose far
      // ends differ.  Reaching the cap means the window cannot see the end.
      Int ia = a.k, ib = vb[j].k;
      QuadraticNumber right_end = a.pos;
      bool right_open = false;
      while (true) {
        if (right_end >= walk_hi) {
          right_open = true;
          break;
        }
        if (t1.label(ia) != t2.label(ib)) break;
        QuadraticNumber ea = t1.vertex(ia + 1);
        QuadraticNumber eb = t2.vertex(ib + 1) + y;
        if (ea != eb) {
          right_end = std::min(ea, eb);
          break;
        }
        right_end = ea;
        ia += 1;
        ib += 1;
      }
      ia = a.k;
      ib = vb[j].k;
      QuadraticNumber left_end = a.pos;
      bool left_open = false;
      while (true) {
        if (left_end <= walk_lo) {
          left_open = true;
          break;
        }
        if (t1.label(ia - 1) != t2.label(ib - 1)) break;
        QuadraticNumber sa = t1.vertex(ia - 1);
        QuadraticNumber sb = t2.vertex(ib - 1) + y;
        if (sa != sb) {
          left_end = std::max(sa, sb);
          break;
        }
        left_end = sa;
        ia -= 1;
        ib -= 1;
      }
      islands.emplace_back(left_end, right_end);

      XRange r{-half, half};          // |x| <= eps/2
      r.clip_lo(-half - y, false);    // |x + y| <= eps/2
      r.clip_hi(half - y, false);
      if (!right_open) r.clip_lo(inv - right_end, false);
      if (!left_open) r.clip_hi(-inv - left_end, false);
      if (r.feasible()) return true;
    }
  }
  return false;
}

MetricInterval metric_d(const Tiling& t1, const Tiling& t2, const Rational& tol) {
  if (!(tol > Rational(0))) throw std::domain_error("tolerance must be positive");
  if (t1.same_realization(t2)) return MetricInterval{Rational(0), Rational(0)};
  Rational hi(1);
  while (!metric_feasible(t1, t2, QuadraticNumber(hi))) {
    hi *= Rational(2);
    if (hi > Rational(4096)) throw std::logic_error("tilings never agree at any scale");
  }
  Rational lo(0);
  while (hi - lo > tol) {
    Rational mid = (lo + hi) / Rational(2);
    if (metric_feasible(t1, t2, QuadraticNumber(mid)))
      hi = mid;
    else
      lo = mid;
  }
  return MetricInterval{lo, hi};
}

std::vector<QuadraticNumber> return_vectors(const Tiling& t, const Patch& p,
                                            const QuadraticNumber& radius) {
  if (p.tiles.empty()) throw std::invalid_argument("return vectors of an empty patch");
  if (radius.sign() < 0) throw std::domain_error("radius must be nonnegative");
  for (std::size_t i = 0; i + 1 < p.tiles.size(); ++i) {
    if (p.tiles[i].right() != p.tiles[i + 1].left)
      throw std::invalid_argument("patch tiles must be consecutive");
  }

  // Anchor the patch at its recorded position: labels, boundary and lengths
  // must reproduce the tiling's own run of tiles there.  Lengths depend only
  // on labels, so any other index window with the same labels is exactly the
  // patch translated by a vertex difference; no per-candidate geometry checks
  // are needed afterwards.
  const std::size_t m = p.tiles.size();
  const std::vector<QuadraticNumber> lens = t.lengths();
  const Int k0 = t.tile_index_at(p.tiles.front().left);
  bool anchored = t.vertex(k0) == p.tiles.front().left;
  for (std::size_t i = 0; anchored && i < m; ++i) {
    const Tile& tl = p.tiles[i];
    anchored = tl.label >= 0 && static_cast<std::size_t>(tl.label) < lens.size() &&
               t.label(Int(k0 + Int(i))) == tl.label && tl.length == lens[static_cast<std::size_t>(tl.label)];
  }
  if (!anchored) throw std::invalid_argument("patch not found in tiling");

  const QuadraticNumber base = p.lo();
  const Int klo = t.tile_index_at(base - radius);
  const Int khi = t.tile_index_at(base + radius);
  if (!fits_long(Int(khi - klo)) || Int(khi - klo) > Int(5000000))
    throw std::overflow_error("return vector search spans too many tiles");
  const long n = Int(khi - klo).get_si();

  std::vector<int> labels(static_cast<std::size_t>(n) + m);
  for (std::size_t i = 0; i < labels.size(); ++i) labels[i] = t.label(Int(klo + Int(i)));

  std::vector<QuadraticNumber> out;
  for (long j = 0; j <= n; ++j) {
    bool hit = true;
    for (std::size_t i = 0; i < m && hit; ++i)
      hit = labels[static_cast<std::size_t>(j) + i] == p.tiles[i].label;
    if (!hit) continue;
    QuadraticNumber v = t.vertex(Int(klo + Int(j))) - base;
    if (v.abs() > radius) continue;
    out.push_back(std::move(v));
  }
  return out;
}

std::vector<QuadraticNumber> ReturnModule::generators() const {
  std::vector<QuadraticNumber> out;
  out.reserve(rows.size());
  for (const auto& row : rows) out.push_back(int_pair_value(row[0], row[1], theta));
  return out;
}

ReturnModule return_module(const std::vector<QuadraticNumber>& vectors,
                           const QuadraticNumber& theta) {
  std::vector<std::array<Int, 2>> work;
  for (const QuadraticNumber& v : vectors) {
    auto [c0, c1] = decompose(v, theta);
    if (!c0.is_integer() || !c1.is_integer())
      throw std::domain_error("vector is not an integer combination of 1 and theta");
    Int a = c0.num(), b = c1.num();
    if (a != 0 || b != 0) work.push_back({a, b});
  }

  // Euclid on the first coordinates until at most one row carries one.
  while (true) {
    std::size_t i1 = work.size(), i2 = work.size();
    for (std::size_t i = 0; i < work.size(); ++i) {
      if (work[i][0] == 0) continue;
      if (i1 == work.size())
        i1 = i;
      else {
        i2 = i;
        break;
      }
    }
    if (i2 == work.size()) break;
    if (abs(work[i1][0]) > abs(work[i2][0])) std::swap(i1, i2);
    Int q = work[i2][0] / work[i1][0];  // truncated: remainder shrinks
    work[i2][0] -= q * work[i1][0];
    work[i2][1] -= q * work[i1][1];
    if (work[i2][0] == 0 && work[i2][1] == 0) work.erase(work.begin() + static_cast<std::ptrdiff_t>(i2));
  }

  std::optional<std::array<Int, 2>> row1;
  Int g2(0);
  for (const auto& row : work) {
    if (row[0] != 0) {
      row1 = row;
      if (row1->at(0) < 0) {
        row1->at(0) = -row1->at(0);
        row1->at(1) = -row1->at(1);
      }
    } else {
      g2 = gcd(g2, row[1]);
    }
  }
  if (g2 < 0) g2 = -g2;

  ReturnModule out;
  out.theta = theta;
  if (row1) {
    if (g2 != 0) {
      Int b = row1->at(1);
      b -= fdiv(b, g2) * g2;  // representative in [0, g2)
      row1->at(1) = b;
    }
    out.rows.push_back(*row1);
  }
  if (g2 != 0) out.rows.push_back({Int(0), g2});
  return out;
}

QuadraticNumber torus_reduce(const ReturnModule& m, const QuadraticNumber& x) {
  auto [q0, q1] = decompose(x, m.theta);
  const std::array<Int, 2>* diag = nullptr;   // row (a, b), a > 0
  const std::array<Int, 2>* upper = nullptr;  // row (0, c), c > 0
  for (const auto& row : m.rows) (row[0] != 0 ? diag : upper) = &row;

  QuadraticNumber rep = x;
  if (diag) {
    Rational lam = q0 / Rational((*diag)[0]);
    Int k = lam.floor();
    rep -= QuadraticNumber(k) * int_pair_value((*diag)[0], (*diag)[1], m.theta);
    q1 -= Rational(k) * Rational((*diag)[1]);
  }
  if (upper) {
    Rational lam = q1 / Rational((*upper)[1]);
    Int k = lam.floor();
    rep -= QuadraticNumber(k) * int_pair_value((*upper)[0], (*upper)[1], m.theta);
  }
  return rep;
}

TorusPoint torus_project(const Tiling& t, const ReturnModule& m) {
  QuadraticNumber v0 = t.vertex(t.tile_index_at(QuadraticNumber(0)));
  return TorusPoint{torus_reduce(m, v0), t.singular_tag()};
}

Word phi_block(const Tiling& t, long from, long to) {
  if (from > to) throw std::invalid_argument("phi block: from exceeds to");
  const Int k0 = t.tile_index_at(QuadraticNumber(0));
  Word w;
  w.base_index = from;
  w.symbols.reserve(static_cast<std::size_t>(to - from));
  for (long k = from; k < to; ++k) w.symbols.push_back(t.label(Int(k0 + k)));
  return w;
}

Tiling psi(const SturmianParams& s) {
  WindowConvention conv = s.branch == Branch::upper ? WindowConvention::half_open_high
                                                    : WindowConvention::half_open_low;
  return Tiling::from_cps(CutProjectScheme(s.alpha, s.rho, conv));
}

QuadraticNumber delta_alpha(const SturmianParams& s) {
  return sturmian_symbol(s, 0) == 0 ? QuadraticNumber(-1) : -s.alpha;
}

Int translation_cocycle(const Tiling& t, const QuadraticNumber& x) {
  return t.tile_index_at(-x) - t.tile_index_at(QuadraticNumber(0));
}

}  // namespace aptile
