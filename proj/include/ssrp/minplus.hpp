#ifndef SSRP_MINPLUS_HPP
#define SSRP_MINPLUS_HPP

// Min-plus products through replacement paths: integer matrices are
// normalized into [1,2), each batch of rows of X becomes an undirected gadget
// graph whose replacement-path distances encode rows of X * Y, and APSP
// follows by repeated squaring.

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdint>
#include <istream>
#include <limits>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "ssrp/fixed_rational.hpp"
#include "ssrp/oracle.hpp"

namespace ssrp {

template <class T>
struct MinPlusTraits;

template <>
struct MinPlusTraits<FixedRational> {
  static FixedRational inf() { return FixedRational::inf(); }
  static bool is_inf(FixedRational v) { return v.is_inf(); }
  static FixedRational add(FixedRational a, FixedRational b) { return a + b; }
};

template <>
struct MinPlusTraits<std::int64_t> {
  static constexpr std::int64_t inf() { return std::numeric_limits<std::int64_t>::max(); }
  static bool is_inf(std::int64_t v) { return v == inf(); }
  static std::int64_t add(std::int64_t a, std::int64_t b) {
    if (is_inf(a) || is_inf(b)) return inf();
    std::int64_t r;
    if (__builtin_add_overflow(a, b, &r) || r == inf()) throw Error("integer overflow in min-plus sum");
    return r;
  }
};

/// Square matrix over a min-plus semiring entry type.
template <class T>
class MinPlusMatrix {
 public:
  using Traits = MinPlusTraits<T>;

  MinPlusMatrix() = default;
  explicit MinPlusMatrix(std::size_t n) : n_(n), a_(n * n, Traits::inf()) {}

  std::size_t size() const { return n_; }
  T& operator()(std::size_t i, std::size_t j) { return a_[i * n_ + j]; }
  const T& operator()(std::size_t i, std::size_t j) const { return a_[i * n_ + j]; }

  std::size_t finite_count() const {
    return static_cast<std::size_t>(std::count_if(a_.begin(), a_.end(), [](const T& v) { return !Traits::is_inf(v); }));
  }

  friend bool operator==(const MinPlusMatrix&, const MinPlusMatrix&) = default;

 private:
  std::size_t n_ = 0;
  std::vector<T> a_;
};

using RationalMatrix = MinPlusMatrix<FixedRational>;
using IntMatrix = MinPlusMatrix<std::int64_t>;
inline constexpr std::int64_t kIntInf = MinPlusTraits<std::int64_t>::inf();

template <class T>
MinPlusMatrix<T> minplus_direct(const MinPlusMatrix<T>& x, const MinPlusMatrix<T>& y) {
  using Tr = MinPlusTraits<T>;
  if (x.size() != y.size()) throw Error("min-plus operands differ in size");
  const std::size_t n = x.size();
  MinPlusMatrix<T> z(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k) {
      if (Tr::is_inf(x(i, k))) continue;
      for (std::size_t j = 0; j < n; ++j) {
        const T cand = Tr::add(x(i, k), y(k, j));
        if (cand < z(i, j)) z(i, j) = cand;
      }
    }
  return z;
}

// ---------------------------------------------------------------------------
// Normalization

struct Normalized {
  RationalMatrix a, b;
  std::int64_t scale = 1;  // M_bar
};

/// A -> A / M_bar + 1 with M_bar the least power of two above every finite entry.
inline Normalized normalize_matrices(const IntMatrix& a, const IntMatrix& b) {
  if (a.size() != b.size()) throw Error("normalization operands differ in size");
  std::int64_t max_entry = -1;
  for (const IntMatrix* m : {&a, &b})
    for (std::size_t i = 0; i < m->size(); ++i)
      for (std::size_t j = 0; j < m->size(); ++j) {
        const std::int64_t v = (*m)(i, j);
        if (v == kIntInf) continue;
        if (v < 0) throw Error("normalization needs non-negative entries");
        max_entry = std::max(max_entry, v);
      }
  if (max_entry < 0) throw Error("normalization of all-infinite matrices");
  if (max_entry >= (std::int64_t{1} << 30)) throw Error("matrix entry too large to normalize exactly");
  const std::int64_t scale = static_cast<std::int64_t>(std::bit_floor(static_cast<std::uint64_t>(max_entry))) << 1;
  Normalized out{RationalMatrix(a.size()), RationalMatrix(a.size()), std::max<std::int64_t>(scale, 1)};
  const std::int64_t step = FixedRational::kOne / out.scale;  // exact: scale divides 2^32
  auto convert = [&](const IntMatrix& src, RationalMatrix& dst) {
    for (std::size_t i = 0; i < src.size(); ++i)
      for (std::size_t j = 0; j < src.size(); ++j)
        if (src(i, j) != kIntInf) dst(i, j) = FixedRational::from_raw(src(i, j) * step + FixedRational::kOne);
  };
  convert(a, out.a);
  convert(b, out.b);
  return out;
}

/// C = (C_bar - 2) * M_bar.
inline IntMatrix denormalize(const RationalMatrix& c, std::int64_t scale) {
  if (scale <= 0 || (scale & (scale - 1)) != 0 || scale > FixedRational::kOne) throw Error("scale must be a power of two <= 2^32");
  const std::int64_t step = FixedRational::kOne / scale;
  IntMatrix out(c.size());
  for (std::size_t i = 0; i < c.size(); ++i)
    for (std::size_t j = 0; j < c.size(); ++j) {
      if (c(i, j).is_inf()) continue;
      const std::int64_t shifted = c(i, j).raw() - 2 * FixedRational::kOne;
      if (shifted < 0 || shifted % step != 0) throw Error("denormalized entry is not a non-negative integer");
      out(i, j) = shifted / step;
    }
  return out;
}

// ---------------------------------------------------------------------------
// Gadget

/// Undirected gadget for rows 1..L-1 of X. Layers a (rows), b, c (columns of
/// Y), spine x_1..x_L, and an auxiliary unit-length path from x_i to a_i of
/// length 8(L - i) + 2, so that with spine edge (x_i, x_{i+1}) failed the
/// distance from x_1 to a_i is 8L - 7i + 1.
struct Gadget {
  WeightedGraph graph{0, true};
  std::size_t rows = 0;  // L - 1
  std::size_t L = 0;
  std::vector<VertexId> a, b, c, spine;  // spine[i-1] = x_i; a has L entries

  VertexId source() const { return spine.front(); }
  Edge spine_edge(std::size_t i) const { return {spine[i - 1], spine[i]}; }  // (x_i, x_{i+1})
  std::int64_t calibration(std::size_t i) const { return 8 * static_cast<std::int64_t>(L) - 7 * static_cast<std::int64_t>(i) + 1; }
};

inline std::size_t gadget_path_count(std::size_t n) {
  return static_cast<std::size_t>(std::ceil(std::sqrt(static_cast<double>(n)))) + 1;
}

/// `x_block` holds L-1 rows (row r is a_{r+1}); entries must be in [1,2) or inf.
inline Gadget build_gadget(const std::vector<std::vector<FixedRational>>& x_block, const RationalMatrix& y) {
  const std::size_t n = y.size();
  Gadget gd;
  gd.rows = x_block.size();
  gd.L = gd.rows + 1;
  const FixedRational one = FixedRational::from_int(1), two = FixedRational::from_int(2);
  auto check = [&](FixedRational v) {
    if (!v.is_inf() && (v < one || v >= two)) throw Error("gadget entries must lie in [1, 2)");
  };
  WeightedGraph& g = gd.graph;
  for (std::size_t i = 0; i < gd.L; ++i) gd.a.push_back(g.add_vertex());
  for (std::size_t k = 0; k < n; ++k) gd.b.push_back(g.add_vertex());
  for (std::size_t j = 0; j < n; ++j) gd.c.push_back(g.add_vertex());
  for (std::size_t i = 0; i < gd.L; ++i) gd.spine.push_back(g.add_vertex());

  for (std::size_t r = 0; r < gd.rows; ++r) {
    if (x_block[r].size() != n) throw Error("gadget row has the wrong width");
    for (std::size_t k = 0; k < n; ++k) {
      check(x_block[r][k]);
      if (x_block[r][k].finite()) g.add_edge(gd.a[r], gd.b[k], x_block[r][k]);
    }
  }
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t j = 0; j < n; ++j) {
      check(y(k, j));
      if (y(k, j).finite()) g.add_edge(gd.b[k], gd.c[j], y(k, j));
    }
  for (std::size_t i = 1; i < gd.L; ++i) g.add_edge(gd.spine[i - 1], gd.spine[i], one);
  for (std::size_t i = 1; i <= gd.L; ++i) {
    const std::size_t length = 8 * (gd.L - i) + 2;
    VertexId prev = gd.spine[i - 1];
    for (std::size_t step = 1; step < length; ++step) {
      const VertexId mid = g.add_vertex();
      g.add_edge(prev, mid, one);
      prev = mid;
    }
    g.add_edge(prev, gd.a[i - 1], one);
  }
  return gd;
}

/// Z = X * Y through ceil(n / (L-1)) gadget batches, each answered by one
/// weighted replacement-paths call from x_1 with the spine edges failed.
inline RationalMatrix minplus_via_ssrp(const RationalMatrix& x, const RationalMatrix& y) {
  if (x.size() != y.size()) throw Error("min-plus operands differ in size");
  const std::size_t n = x.size();
  RationalMatrix z(n);
  if (n == 0) return z;
  const std::size_t L = gadget_path_count(n);
  const std::size_t rows = L - 1;
  for (std::size_t first = 0; first < n; first += rows) {
    std::vector<std::vector<FixedRational>> block(rows, std::vector<FixedRational>(n, FixedRational::inf()));
    for (std::size_t r = 0; r < rows && first + r < n; ++r)
      for (std::size_t k = 0; k < n; ++k) block[r][k] = x(first + r, k);
    const Gadget gd = build_gadget(block, y);
    std::vector<Edge> failures;
    for (std::size_t i = 1; i < L; ++i) failures.push_back(gd.spine_edge(i));
    const auto alpha = weighted_ssrp_oracle(gd.graph, gd.source(), failures);
    for (std::size_t i = 1; i < L && first + i - 1 < n; ++i) {
      const FixedRational base = FixedRational::from_int(gd.calibration(i));
      const FixedRational threshold = FixedRational::from_int(gd.calibration(i) + 4);
      for (std::size_t j = 0; j < n; ++j) {
        const FixedRational al = alpha[i - 1][gd.c[j]];
        z(first + i - 1, j) = al < threshold ? al - base : FixedRational::inf();
      }
    }
  }
  return z;
}

// ---------------------------------------------------------------------------
// APSP

enum class MinPlusEngine { kGadget, kDirect };

inline IntMatrix minplus_integer(const IntMatrix& a, const IntMatrix& b, MinPlusEngine engine) {
  if (a.finite_count() == 0 || b.finite_count() == 0) return IntMatrix(a.size());
  const Normalized nm = normalize_matrices(a, b);
  const RationalMatrix c = engine == MinPlusEngine::kGadget ? minplus_via_ssrp(nm.a, nm.b) : minplus_direct(nm.a, nm.b);
  return denormalize(c, nm.scale);
}

/// APSP by ceil(log2 n) squarings, each followed by an entrywise min with the previous iterate.
inline IntMatrix apsp_via_minplus(const IntMatrix& w0, MinPlusEngine engine = MinPlusEngine::kGadget) {
  const std::size_t n = w0.size();
  IntMatrix m = w0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (m(i, j) != kIntInf && m(i, j) < 0) throw Error("negative edge length");
      if (i == j && m(i, j) != 0) throw Error("diagonal entries must be 0");
    }
  const std::size_t rounds = n <= 1 ? 0 : static_cast<std::size_t>(std::bit_width(n - 1));
  for (std::size_t r = 0; r < rounds; ++r) {
    const IntMatrix sq = minplus_integer(m, m, engine);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) m(i, j) = std::min(m(i, j), sq(i, j));
  }
  return m;
}

inline IntMatrix floyd_warshall(const IntMatrix& w0) {
  IntMatrix d = w0;
  const std::size_t n = d.size();
  for (std::size_t i = 0; i < n; ++i)
    if (d(i, i) == kIntInf || d(i, i) > 0) d(i, i) = 0;
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i) {
      if (d(i, k) == kIntInf) continue;
      for (std::size_t j = 0; j < n; ++j) {
        if (d(k, j) == kIntInf) continue;
        d(i, j) = std::min(d(i, j), d(i, k) + d(k, j));
      }
    }
  return d;
}

// ---------------------------------------------------------------------------
// Matrix files: "<n>" then n rows of n entries; "inf" allowed.

inline RationalMatrix parse_matrix(std::istream& in) {
  std::string tok;
  if (!(in >> tok)) throw Error("matrix file is empty");
  std::size_t n = 0;
  try {
    std::size_t pos = 0;
    n = std::stoul(tok, &pos);
    if (pos != tok.size()) throw Error("");
  } catch (const std::exception&) {
    throw Error("matrix size '" + tok + "' is not an integer");
  }
  if (n > 4096) throw Error("matrix too large");
  RationalMatrix m(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (!(in >> tok))
        throw Error("matrix ends early at row " + std::to_string(i + 1) + ", column " + std::to_string(j + 1));
      try {
        m(i, j) = FixedRational::parse(tok);
      } catch (const Error& e) {
        throw Error("row " + std::to_string(i + 1) + ", column " + std::to_string(j + 1) + ": " + e.what());
      }
    }
  if (in >> tok) throw Error("trailing data after matrix: '" + tok + "'");
  return m;
}

inline IntMatrix to_int_matrix(const RationalMatrix& m) {
  IntMatrix out(m.size());
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < m.size(); ++j)
      if (m(i, j).finite()) out(i, j) = m(i, j).to_int();
  return out;
}

template <class T>
void write_matrix(std::ostream& out, const MinPlusMatrix<T>& m) {
  out << m.size() << '\n';
  for (std::size_t i = 0; i < m.size(); ++i) {
    for (std::size_t j = 0; j < m.size(); ++j) {
      if (j) out << ' ';
      if (MinPlusTraits<T>::is_inf(m(i, j)))
        out << "inf";
      else
        out << m(i, j);
    }
    out << '\n';
  }
}

}  // namespace ssrp

#endif  // SSRP_MINPLUS_HPP
