#include "vgit/lattice.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

namespace vgit {

// ---------------------------------------------------------------------------
// elementary vector operations
// ---------------------------------------------------------------------------

Int dot(const std::vector<Int>& a, const std::vector<Int>& b) {
  if (a.size() != b.size()) throw std::invalid_argument("dot: length mismatch");
  Int s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

LatticeVector vec_add(const LatticeVector& a, const LatticeVector& b) {
  if (a.size() != b.size()) throw std::invalid_argument("vec_add: length mismatch");
  LatticeVector r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

LatticeVector vec_sub(const LatticeVector& a, const LatticeVector& b) {
  if (a.size() != b.size()) throw std::invalid_argument("vec_sub: length mismatch");
  LatticeVector r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

LatticeVector vec_scale(const Int& c, const LatticeVector& a) {
  LatticeVector r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = c * a[i];
  return r;
}

bool is_zero(const LatticeVector& a) {
  return std::all_of(a.begin(), a.end(), [](const Int& v) { return v == 0; });
}

bool all_nonnegative(const LatticeVector& a) {
  return std::all_of(a.begin(), a.end(), [](const Int& v) { return v >= 0; });
}

bool dominates(const LatticeVector& b, const LatticeVector& a) {
  if (a.size() != b.size()) throw std::invalid_argument("dominates: length mismatch");
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

Int coord_sum(const LatticeVector& a) {
  Int s = 0;
  for (const Int& v : a) s += v;
  return s;
}

bool grlex_less(const LatticeVector& a, const LatticeVector& b) {
  Int sa = coord_sum(a), sb = coord_sum(b);
  if (sa != sb) return sa < sb;
  // within a grade, larger leading entries come first
  for (std::size_t i = 0; i < std::min(a.size(), b.size()); ++i)
    if (a[i] != b[i]) return a[i] > b[i];
  return a.size() < b.size();
}

void sort_grlex(std::vector<LatticeVector>& v) { std::sort(v.begin(), v.end(), grlex_less); }

std::string format_vector(const LatticeVector& v) {
  std::ostringstream os;
  os << "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) os << ",";
    os << v[i];
  }
  os << ")";
  return os.str();
}

Completeness worst(Completeness a, Completeness b) {
  return static_cast<int>(a) >= static_cast<int>(b) ? a : b;
}

const char* to_string(Completeness c) {
  switch (c) {
    case Completeness::certified: return "certified";
    case Completeness::complete_to_bound: return "complete-to-bound";
    case Completeness::truncated: return "truncated";
  }
  return "unknown";
}

// ---------------------------------------------------------------------------
// hilbert basis by graded completion
// ---------------------------------------------------------------------------

namespace {

// residual value of x under all equations stacked into one vector
LatticeVector system_value(const DiophantineSystem& sys, const LatticeVector& x) {
  LatticeVector v;
  v.reserve(1 + sys.extra.size());
  v.push_back(dot(sys.weights, x));
  for (const auto& row : sys.extra) v.push_back(dot(row, x));
  return v;
}

}  // namespace

HilbertBasis hilbert_basis(const DiophantineSystem& sys, const Int& bound) {
  const std::size_t r = sys.num_vars;
  if (sys.weights.size() != r)
    throw std::invalid_argument("hilbert_basis: weights length differs from num_vars");
  for (const auto& row : sys.extra)
    if (row.size() != r)
      throw std::invalid_argument("hilbert_basis: extra equation length differs from num_vars");
  if (bound < 0) throw std::invalid_argument("hilbert_basis: negative bound");

  HilbertBasis out;
  if (r == 0) return out;  // nothing to generate

  // residual value of each unit vector
  std::vector<LatticeVector> unit_value(r);
  for (std::size_t i = 0; i < r; ++i) {
    LatticeVector e(r, 0);
    e[i] = 1;
    unit_value[i] = system_value(sys, e);
  }

  std::vector<LatticeVector> basis;
  auto dominated_by_basis = [&](const LatticeVector& x) {
    for (const auto& b : basis)
      if (dominates(x, b)) return true;
    return false;
  };

  std::set<LatticeVector> frontier;
  for (std::size_t i = 0; i < r; ++i) {
    LatticeVector e(r, 0);
    e[i] = 1;
    frontier.insert(std::move(e));
  }

  Int level = 1;
  while (!frontier.empty() && level <= bound) {
    std::vector<LatticeVector> solutions;
    std::set<LatticeVector> extensions;
    for (const auto& x : frontier) {
      if (dominated_by_basis(x)) continue;  // can only happen via earlier levels
      LatticeVector v = system_value(sys, x);
      if (is_zero(v)) {
        solutions.push_back(x);
        continue;  // solutions are never extended
      }
      // grow only in directions that reduce the residual
      for (std::size_t i = 0; i < r; ++i) {
        if (dot(v, unit_value[i]) < 0) {
          LatticeVector y = x;
          y[i] += 1;
          extensions.insert(std::move(y));
        }
      }
    }
    // same-level solutions cannot dominate one another (equal coordinate sums)
    for (auto& s : solutions) basis.push_back(std::move(s));
    frontier.clear();
    for (const auto& y : extensions)
      if (!dominated_by_basis(y)) frontier.insert(y);
    level += 1;
  }

  out.completeness = frontier.empty() ? Completeness::certified : Completeness::truncated;
  sort_grlex(basis);
  out.elements = std::move(basis);
  return out;
}

// ---------------------------------------------------------------------------
// monoid membership
// ---------------------------------------------------------------------------

namespace {

struct MembershipSearch {
  const std::vector<LatticeVector>& gens;
  std::vector<Int> mult;
  std::vector<Int> best;
  bool found = false;
  long long nodes = 0;
  static constexpr long long kNodeBudget = 4'000'000;

  explicit MembershipSearch(const std::vector<LatticeVector>& g)
      : gens(g), mult(g.size(), 0) {}

  bool coverable(const LatticeVector& rem, std::size_t idx) const {
    for (std::size_t j = 0; j < rem.size(); ++j) {
      if (rem[j] == 0) continue;
      bool cover = false;
      for (std::size_t i = idx; i < gens.size() && !cover; ++i)
        if (gens[i][j] > 0) cover = true;
      if (!cover) return false;
    }
    return true;
  }

  void dfs(std::size_t idx, LatticeVector rem) {
    if (found) return;
    if (++nodes > kNodeBudget)
      throw std::runtime_error("monoid_membership: search budget exceeded");
    if (is_zero(rem)) {
      best = mult;
      found = true;
      return;
    }
    if (idx == gens.size() || !coverable(rem, idx)) return;
    // largest feasible multiplicity for this generator
    Int cap = -1;
    for (std::size_t j = 0; j < rem.size(); ++j) {
      if (gens[idx][j] > 0) {
        Int q = rem[j] / gens[idx][j];
        if (cap < 0 || q < cap) cap = q;
      }
    }
    for (Int c = cap; c >= 0 && !found; --c) {
      mult[idx] = c;
      dfs(idx + 1, vec_sub(rem, vec_scale(c, gens[idx])));
    }
    mult[idx] = 0;
  }
};

}  // namespace

MembershipWitness monoid_membership(const LatticeVector& target,
                                    const std::vector<LatticeVector>& gens) {
  for (const auto& g : gens) {
    if (g.size() != target.size())
      throw std::invalid_argument("monoid_membership: generator length differs from target");
    if (!all_nonnegative(g) || is_zero(g))
      throw std::invalid_argument("monoid_membership: generators must be nonnegative and nonzero");
  }
  MembershipWitness w;
  w.multiplicities.assign(gens.size(), 0);
  if (is_zero(target)) {
    w.member = true;  // the zero vector has the empty decomposition
    return w;
  }
  if (!all_nonnegative(target)) return w;
  MembershipSearch search(gens);
  search.dfs(0, target);
  if (search.found) {
    w.member = true;
    w.multiplicities = search.best;
  }
  return w;
}

// ---------------------------------------------------------------------------
// integer linear algebra
// ---------------------------------------------------------------------------

namespace {

// floor division with nonnegative remainder (divisor must be positive)
Int floor_div(const Int& x, const Int& y) {
  Int q = x / y;
  if (x % y < 0) q -= 1;
  return q;
}

// In-place row Hermite normal form; pivots are searched in columns
// [0, pivot_col_limit). Returns the rank (number of pivot rows).
std::size_t row_hnf_inplace(IntMatrix& a, std::size_t pivot_col_limit) {
  if (a.empty()) return 0;
  const std::size_t k = a.size();
  const std::size_t m = a[0].size();
  std::size_t pr = 0;
  for (std::size_t col = 0; col < std::min(m, pivot_col_limit) && pr < k; ++col) {
    std::size_t piv = pr;
    while (piv < k && a[piv][col] == 0) ++piv;
    if (piv == k) continue;
    std::swap(a[pr], a[piv]);
    // euclidean elimination below the pivot
    for (std::size_t i = pr + 1; i < k; ++i) {
      while (a[i][col] != 0) {
        Int q = a[pr][col] / a[i][col];
        if (q != 0)
          for (std::size_t j = 0; j < m; ++j) a[pr][j] -= q * a[i][j];
        std::swap(a[pr], a[i]);
      }
    }
    if (a[pr][col] < 0)
      for (std::size_t j = 0; j < m; ++j) a[pr][j] = -a[pr][j];
    // reduce entries above the pivot into [0, pivot)
    for (std::size_t i = 0; i < pr; ++i) {
      Int q = floor_div(a[i][col], a[pr][col]);
      if (q != 0)
        for (std::size_t j = 0; j < m; ++j) a[i][j] -= q * a[pr][j];
    }
    ++pr;
  }
  return pr;
}

}  // namespace

IntMatrix hermite_row_basis(IntMatrix rows) {
  if (rows.empty()) return {};
  std::size_t rank = row_hnf_inplace(rows, rows[0].size());
  rows.resize(rank);
  return rows;
}

std::size_t lattice_rank(const std::vector<LatticeVector>& gens) {
  return hermite_row_basis(gens).size();
}

IntMatrix integer_kernel(const IntMatrix& a) {
  if (a.empty()) return {};
  const std::size_t k = a.size();
  const std::size_t m = a[0].size();
  // rows of [A^T | I]: a row reads ((A.x)^T | x^T); rows whose first block
  // vanishes carry a kernel basis in the identity block
  IntMatrix work(m, std::vector<Int>(k + m, 0));
  for (std::size_t j = 0; j < m; ++j) {
    for (std::size_t i = 0; i < k; ++i) work[j][i] = a[i][j];
    work[j][k + j] = 1;
  }
  std::size_t rank = row_hnf_inplace(work, k);
  IntMatrix kernel;
  for (std::size_t i = rank; i < m; ++i)
    kernel.emplace_back(work[i].begin() + static_cast<std::ptrdiff_t>(k), work[i].end());
  return hermite_row_basis(std::move(kernel));
}

IntMatrix saturation_basis(const std::vector<LatticeVector>& gens) {
  if (gens.empty()) return {};
  const std::size_t m = gens[0].size();
  IntMatrix g = hermite_row_basis(gens);
  if (g.empty()) return {};
  IntMatrix orth = integer_kernel(g);
  if (orth.empty()) {
    IntMatrix id(m, std::vector<Int>(m, 0));
    for (std::size_t i = 0; i < m; ++i) id[i][i] = 1;
    return id;
  }
  return integer_kernel(orth);
}

std::vector<Int> smith_divisors(IntMatrix a) {
  std::vector<Int> divisors;
  if (a.empty() || a[0].empty()) return divisors;
  const std::size_t k = a.size();
  const std::size_t m = a[0].size();
  std::size_t t = 0;
  while (t < k && t < m) {
    // locate a nonzero entry in the trailing submatrix
    std::size_t pi = t, pj = t;
    bool nonzero = false;
    for (std::size_t i = t; i < k && !nonzero; ++i)
      for (std::size_t j = t; j < m && !nonzero; ++j)
        if (a[i][j] != 0) {
          pi = i;
          pj = j;
          nonzero = true;
        }
    if (!nonzero) break;
    std::swap(a[t], a[pi]);
    for (std::size_t i = 0; i < k; ++i) std::swap(a[i][t], a[i][pj]);
    // clear row and column t by euclidean steps; the corner only moves when a
    // division leaves a remainder, so exact divisions cannot cycle
    bool dirty = true;
    while (dirty) {
      dirty = false;
      for (std::size_t i = t + 1; i < k; ++i) {
        while (a[i][t] != 0) {
          Int q = a[i][t] / a[t][t];
          if (q != 0)
            for (std::size_t j = t; j < m; ++j) a[i][j] -= q * a[t][j];
          if (a[i][t] == 0) break;
          std::swap(a[t], a[i]);
          dirty = true;
        }
      }
      for (std::size_t j = t + 1; j < m; ++j) {
        while (a[t][j] != 0) {
          Int q = a[t][j] / a[t][t];
          if (q != 0)
            for (std::size_t i = t; i < k; ++i) a[i][j] -= q * a[i][t];
          if (a[t][j] == 0) break;
          for (std::size_t i = t; i < k; ++i) std::swap(a[i][t], a[i][j]);
          dirty = true;
        }
      }
    }
    // enforce divisibility of the remaining block by the corner entry
    bool fixed = true;
    for (std::size_t i = t + 1; i < k && fixed; ++i)
      for (std::size_t j = t + 1; j < m && fixed; ++j)
        if (a[i][j] % a[t][t] != 0) {
          for (std::size_t jj = t; jj < m; ++jj) a[t][jj] += a[i][jj];
          fixed = false;
        }
    if (!fixed) continue;  // redo the clearing pass with the merged row
    if (a[t][t] < 0) a[t][t] = -a[t][t];
    divisors.push_back(a[t][t]);
    ++t;
  }
  std::vector<Int> nontrivial;
  for (const Int& d : divisors)
    if (d != 1) nontrivial.push_back(d);
  return nontrivial;
}

std::optional<std::vector<Int>> coordinates_in_basis(const IntMatrix& basis,
                                                     const LatticeVector& v) {
  const std::size_t r = basis.size();
  if (r == 0) return is_zero(v) ? std::optional<std::vector<Int>>(std::vector<Int>{})
                                : std::nullopt;
  const std::size_t m = basis[0].size();
  if (v.size() != m) throw std::invalid_argument("coordinates_in_basis: length mismatch");
  // solve x.B = v by rational elimination on B^T augmented with v
  std::vector<std::vector<Rat>> aug(m, std::vector<Rat>(r + 1));
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < r; ++j) aug[i][j] = Rat(basis[j][i]);
    aug[i][r] = Rat(v[i]);
  }
  std::size_t row = 0;
  std::vector<std::size_t> pivot_of_col(r, SIZE_MAX);
  for (std::size_t col = 0; col < r && row < m; ++col) {
    std::size_t piv = row;
    while (piv < m && aug[piv][col] == 0) ++piv;
    if (piv == m) continue;
    std::swap(aug[row], aug[piv]);
    Rat p = aug[row][col];
    for (std::size_t j = col; j <= r; ++j) aug[row][j] /= p;
    for (std::size_t i = 0; i < m; ++i) {
      if (i == row || aug[i][col] == 0) continue;
      Rat f = aug[i][col];
      for (std::size_t j = col; j <= r; ++j) aug[i][j] -= f * aug[row][j];
    }
    pivot_of_col[col] = row;
    ++row;
  }
  // inconsistent rows mean v is outside the rational span
  for (std::size_t i = row; i < m; ++i)
    if (aug[i][r] != 0) return std::nullopt;
  std::vector<Int> x(r, 0);
  for (std::size_t col = 0; col < r; ++col) {
    if (pivot_of_col[col] == SIZE_MAX) continue;  // basis rows dependent; keep zero
    Rat val = aug[pivot_of_col[col]][r];
    if (rat_den(val) != 1) return std::nullopt;  // in the span but not in the lattice
    x[col] = rat_num(val);
  }
  return x;
}

// ---------------------------------------------------------------------------
// canonical form
// ---------------------------------------------------------------------------

namespace {

// canonical representative of {C.U : U unimodular}: transpose of the row
// Hermite normal form of C^T; rows stay aligned with the rows of C
IntMatrix column_hnf(const IntMatrix& c) {
  if (c.empty()) return {};
  const std::size_t k = c.size();
  const std::size_t r = c[0].size();
  IntMatrix t(r, std::vector<Int>(k));
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < r; ++j) t[j][i] = c[i][j];
  row_hnf_inplace(t, k);
  IntMatrix out(k, std::vector<Int>(r));
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < r; ++j) out[i][j] = t[j][i];
  return out;
}

struct CandidateKey {
  Int negative_entries;
  Int mass;
  IntMatrix sorted_rows;

  bool operator<(const CandidateKey& o) const {
    if (negative_entries != o.negative_entries) return negative_entries < o.negative_entries;
    if (mass != o.mass) return mass < o.mass;
    for (std::size_t i = 0; i < sorted_rows.size(); ++i) {
      if (grlex_less(sorted_rows[i], o.sorted_rows[i])) return true;
      if (grlex_less(o.sorted_rows[i], sorted_rows[i])) return false;
    }
    return false;
  }
};

CandidateKey make_key(IntMatrix rows) {
  CandidateKey key;
  key.negative_entries = 0;
  key.mass = 0;
  for (const auto& row : rows)
    for (const Int& v : row) {
      if (v < 0) key.negative_entries += 1;
      key.mass += abs(v);
    }
  std::sort(rows.begin(), rows.end(), grlex_less);
  key.sorted_rows = std::move(rows);
  return key;
}

constexpr std::size_t kPermutationCap = 9;

}  // namespace

CanonicalForm canonical_form(const std::vector<LatticeVector>& gens) {
  CanonicalForm out;
  if (gens.empty()) return out;
  const std::size_t k = gens.size();
  const std::size_t m = gens[0].size();
  for (const auto& g : gens)
    if (g.size() != m) throw std::invalid_argument("canonical_form: mixed vector lengths");

  IntMatrix sat = saturation_basis(gens);
  out.rank = sat.size();
  if (out.rank == 0) {  // all generators are zero
    out.images.assign(k, LatticeVector{});
    out.images_by_input.assign(k, LatticeVector{});
    return out;
  }

  // coordinates of the generators in the saturation basis
  IntMatrix coords(k);
  for (std::size_t i = 0; i < k; ++i) {
    auto c = coordinates_in_basis(sat, gens[i]);
    if (!c) throw std::runtime_error("canonical_form: generator escapes its saturation");
    coords[i] = std::move(*c);
  }

  out.span_divisors = smith_divisors(coords);

  if (k > kPermutationCap)
    throw std::invalid_argument("canonical_form: more than 9 generators (permutation search cap)");

  // minimum over all row orders of the column Hermite form
  std::vector<std::size_t> perm(k);
  std::iota(perm.begin(), perm.end(), 0);
  std::optional<CandidateKey> best;
  std::vector<std::size_t> best_perm;
  do {
    IntMatrix arranged(k);
    for (std::size_t i = 0; i < k; ++i) arranged[i] = coords[perm[i]];
    IntMatrix h = column_hnf(arranged);
    CandidateKey key = make_key(h);
    if (!best || key < *best) {
      best = std::move(key);
      best_perm = perm;
      out.images_by_input.assign(k, LatticeVector{});
      for (std::size_t i = 0; i < k; ++i) out.images_by_input[perm[i]] = h[i];
    }
  } while (std::next_permutation(perm.begin(), perm.end()));

  out.images = best->sorted_rows;

  // recover the basis W with images_by_input[i] . W == gens[i]: solve the
  // exact linear system column by column using rank many independent rows
  IntMatrix img = out.images_by_input;
  // rational elimination: find rank independent rows of img
  std::vector<std::size_t> rows_used;
  {
    IntMatrix probe;
    for (std::size_t i = 0; i < k && rows_used.size() < out.rank; ++i) {
      probe.push_back(img[i]);
      if (hermite_row_basis(probe).size() == rows_used.size() + 1)
        rows_used.push_back(i);
      else
        probe.pop_back();
    }
  }
  if (rows_used.size() != out.rank)
    throw std::runtime_error("canonical_form: image rank mismatch");
  // solve (img restricted) . W = (gens restricted) over the rationals
  out.basis.assign(out.rank, std::vector<Int>(m, 0));
  for (std::size_t col = 0; col < m; ++col) {
    std::vector<std::vector<Rat>> aug(out.rank, std::vector<Rat>(out.rank + 1));
    for (std::size_t i = 0; i < out.rank; ++i) {
      for (std::size_t j = 0; j < out.rank; ++j) aug[i][j] = Rat(img[rows_used[i]][j]);
      aug[i][out.rank] = Rat(gens[rows_used[i]][col]);
    }
    for (std::size_t piv = 0; piv < out.rank; ++piv) {
      std::size_t sel = piv;
      while (sel < out.rank && aug[sel][piv] == 0) ++sel;
      if (sel == out.rank) throw std::runtime_error("canonical_form: singular image system");
      std::swap(aug[piv], aug[sel]);
      Rat p = aug[piv][piv];
      for (std::size_t j = piv; j <= out.rank; ++j) aug[piv][j] /= p;
      for (std::size_t i = 0; i < out.rank; ++i) {
        if (i == piv || aug[i][piv] == 0) continue;
        Rat f = aug[i][piv];
        for (std::size_t j = piv; j <= out.rank; ++j) aug[i][j] -= f * aug[piv][j];
      }
    }
    for (std::size_t i = 0; i < out.rank; ++i) {
      if (rat_den(aug[i][out.rank]) != 1)
        throw std::runtime_error("canonical_form: non-integral change of basis");
      out.basis[i][col] = rat_num(aug[i][out.rank]);
    }
  }
  // the change of basis must reproduce every generator, not just the solve rows
  for (std::size_t i = 0; i < k; ++i) {
    LatticeVector rebuilt(m, 0);
    for (std::size_t j = 0; j < out.rank; ++j)
      for (std::size_t col = 0; col < m; ++col) rebuilt[col] += img[i][j] * out.basis[j][col];
    if (rebuilt != gens[i]) throw std::runtime_error("canonical_form: change of basis check failed");
  }
  return out;
}

}  // namespace vgit
