#include "lefsig/symplectic.hpp"

#include <utility>

#include "lefsig/errors.hpp"
#include "lefsig/exact_linalg.hpp"

namespace lefsig {

namespace {

// y -> J y for the block form J = [[0,-1],[1,0]] per handle, i.e.
// (Jy)[a_i] = -y[b_i], (Jy)[b_i] = y[a_i].
std::vector<Integer> apply_j(const std::vector<Integer>& y) {
  std::vector<Integer> r(y.size());
  for (std::size_t i = 0; i < y.size(); i += 2) {
    r[i] = -y[i + 1];
    r[i + 1] = y[i];
  }
  return r;
}

std::vector<std::vector<Integer>> multiply(const std::vector<std::vector<Integer>>& lhs,
                                           const std::vector<std::vector<Integer>>& rhs) {
  const std::size_t n = lhs.size();
  std::vector<std::vector<Integer>> out(n, std::vector<Integer>(n, Integer(0)));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = 0; k < n; ++k) {
      const Integer& l = lhs[i][k];
      if (l == 0) continue;
      for (std::size_t j = 0; j < n; ++j) {
        if (rhs[k][j] != 0) out[i][j] += l * rhs[k][j];
      }
    }
  }
  return out;
}

std::vector<std::vector<Integer>> identity_matrix(std::size_t n) {
  std::vector<std::vector<Integer>> m(n, std::vector<Integer>(n, Integer(0)));
  for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

}  // namespace

bool preserves_form(const GenusContext& ctx, const std::vector<std::vector<Integer>>& matrix) {
  const std::size_t n = ctx.dim();
  // M^T J M = J, checked column against column: Phi(col_i, col_j) must match
  // the standard pairing of e_i, e_j.
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      Integer phi = 0;
      for (std::size_t k = 0; k < n; k += 2) {
        phi += matrix[k + 1][i] * matrix[k][j] - matrix[k][i] * matrix[k + 1][j];
      }
      Integer expected = 0;
      if (i / 2 == j / 2) {
        if (i % 2 == 0 && j % 2 == 1) expected = -1;
        if (i % 2 == 1 && j % 2 == 0) expected = 1;
      }
      if (phi != expected) return false;
    }
  }
  return true;
}

SymplecticMap::SymplecticMap(GenusContext ctx, std::vector<std::vector<Integer>> matrix)
    : ctx_(ctx), matrix_(std::move(matrix)) {
  const std::size_t n = ctx_.dim();
  if (matrix_.size() != n) {
    throw ValidationError("symplectic matrix has wrong size");
  }
  for (const auto& row : matrix_) {
    if (row.size() != n) throw ValidationError("symplectic matrix has wrong size");
  }
  if (!preserves_form(ctx_, matrix_)) {
    throw ValidationError("matrix does not preserve the intersection form");
  }
}

SymplecticMap::SymplecticMap(GenusContext ctx, std::vector<std::vector<Integer>> matrix,
                             unchecked_t)
    : ctx_(ctx), matrix_(std::move(matrix)) {}

SymplecticMap SymplecticMap::identity(GenusContext ctx) {
  return SymplecticMap(ctx, identity_matrix(ctx.dim()), unchecked_t{});
}

HomologyClass SymplecticMap::apply(const HomologyClass& x) const {
  if (!(x.ctx() == ctx_)) {
    throw ValidationError("genus context mismatch between map and class");
  }
  const std::size_t n = ctx_.dim();
  std::vector<Integer> out(n, Integer(0));
  for (std::size_t j = 0; j < n; ++j) {
    const Integer& c = x[j];
    if (c == 0) continue;
    for (std::size_t i = 0; i < n; ++i) {
      if (matrix_[i][j] != 0) out[i] += matrix_[i][j] * c;
    }
  }
  return HomologyClass(ctx_, std::move(out));
}

HomologyClass SymplecticMap::column(std::size_t k) const {
  const std::size_t n = ctx_.dim();
  std::vector<Integer> out(n);
  for (std::size_t i = 0; i < n; ++i) out[i] = matrix_[i][k];
  return HomologyClass(ctx_, std::move(out));
}

SymplecticMap SymplecticMap::inverse() const {
  const std::size_t n = ctx_.dim();
  // M^-1 = -J M^T J
  std::vector<std::vector<Integer>> inv(n, std::vector<Integer>(n, Integer(0)));
  for (std::size_t i = 0; i < n; ++i) {
    // row i of -J M^T J: (-J M^T J)[i][j]
    // (M^T J)[r][j] = sum_k M[k][r] J[k][j]; J columns are sparse, do it directly.
    for (std::size_t j = 0; j < n; ++j) {
      // J e_j = +e_{j+1} when j is an a-slot, -e_{j-1} when j is a b-slot.
      const std::size_t jj = (j % 2 == 0) ? j + 1 : j - 1;
      const int jsign = (j % 2 == 0) ? 1 : -1;
      // Row i of -J picks out entry ii with the opposite sign pattern, so the
      // two leading minus signs cancel into +isign.
      const std::size_t ii = (i % 2 == 0) ? i + 1 : i - 1;
      const int isign = (i % 2 == 0) ? 1 : -1;
      inv[i][j] = Integer(isign * jsign) * matrix_[jj][ii];
    }
  }
  return SymplecticMap(ctx_, std::move(inv), unchecked_t{});
}

bool SymplecticMap::is_identity() const {
  const std::size_t n = ctx_.dim();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (matrix_[i][j] != (i == j ? 1 : 0)) return false;
    }
  }
  return true;
}

SymplecticMap twist_action(const HomologyClass& gamma) {
  const GenusContext ctx = gamma.ctx();
  const std::size_t n = ctx.dim();
  // Column k is e_k + Phi(e_k, gamma) gamma, and Phi(e_k, gamma) = (J gamma)_k.
  const std::vector<Integer> jg = apply_j(gamma.coeffs());
  std::vector<std::vector<Integer>> m = identity_matrix(n);
  for (std::size_t k = 0; k < n; ++k) {
    if (jg[k] == 0) continue;
    for (std::size_t i = 0; i < n; ++i) {
      m[i][k] += jg[k] * gamma[i];
    }
  }
  return SymplecticMap(ctx, std::move(m), SymplecticMap::unchecked_t{});
}

SymplecticMap inverse_twist_action(const HomologyClass& gamma) {
  const GenusContext ctx = gamma.ctx();
  const std::size_t n = ctx.dim();
  const std::vector<Integer> jg = apply_j(gamma.coeffs());
  std::vector<std::vector<Integer>> m = identity_matrix(n);
  for (std::size_t k = 0; k < n; ++k) {
    if (jg[k] == 0) continue;
    for (std::size_t i = 0; i < n; ++i) {
      m[i][k] -= jg[k] * gamma[i];
    }
  }
  return SymplecticMap(ctx, std::move(m), SymplecticMap::unchecked_t{});
}

SymplecticMap compose(const SymplecticMap& outer, const SymplecticMap& inner) {
  if (!(outer.ctx() == inner.ctx())) {
    throw ValidationError("genus context mismatch in composition");
  }
  return SymplecticMap(outer.ctx(), multiply(outer.matrix_, inner.matrix_),
                       SymplecticMap::unchecked_t{});
}

namespace {

// Phi(x, y) on raw coefficient vectors.
Integer phi(const std::vector<Integer>& x, const std::vector<Integer>& y) {
  Integer acc = 0;
  for (std::size_t i = 0; i < x.size(); i += 2) {
    acc += x[i + 1] * y[i] - x[i] * y[i + 1];
  }
  return acc;
}

struct Pair {
  std::vector<Integer> u;
  std::vector<Integer> v;  // Phi(u, v) = -1
};

// Symplectic projection off the span of the pairs; for Phi(u,v) = -1 the
// component formula is x -> x + Phi(x,v) u - Phi(x,u) v, which is integral.
void project(std::vector<Integer>& x, const std::vector<Pair>& pairs) {
  for (const Pair& p : pairs) {
    const Integer cu = phi(x, p.v);
    const Integer cv = phi(x, p.u);
    for (std::size_t i = 0; i < x.size(); ++i) {
      x[i] += cu * p.u[i] - cv * p.v[i];
    }
  }
}

bool all_zero(const std::vector<Integer>& x) {
  for (const Integer& e : x) {
    if (e != 0) return false;
  }
  return true;
}

void gcdext(const Integer& a, const Integer& b, Integer& g, Integer& s, Integer& t) {
  mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
}

// A vector v, projected off `pairs`, with Phi(u, v) = -1. Exists whenever u
// is primitive and orthogonal to the pairs, because Phi is unimodular.
std::vector<Integer> dual_vector(const std::vector<Integer>& u, const std::vector<Pair>& pairs) {
  const std::size_t n = u.size();
  // Phi(u, e_j) = u[j+1] on a-slots and -u[j-1] on b-slots; gcd is 1 for
  // primitive u because the form is unimodular.
  std::vector<Integer> t(n);
  for (std::size_t j = 0; j < n; j += 2) {
    t[j] = u[j + 1];
    t[j + 1] = -u[j];
  }
  Integer g = 0;
  std::vector<Integer> lambda(n, Integer(0));
  for (std::size_t j = 0; j < n; ++j) {
    if (t[j] == 0) continue;
    if (g == 0) {
      g = abs(t[j]);
      lambda[j] = signum(t[j]);
    } else {
      Integer gg, s, y;
      gcdext(g, t[j], gg, s, y);
      for (std::size_t k = 0; k < j; ++k) lambda[k] *= s;
      lambda[j] = y;
      g = gg;
    }
    if (g == 1) break;
  }
  if (g != 1) {
    throw InternalInvariantError("no unimodular dual: input class is not primitive");
  }
  // Sum lambda_j t_j = +1; flip to hit Phi(u, v) = -1.
  std::vector<Integer> v(n, Integer(0));
  for (std::size_t j = 0; j < n; ++j) v[j] = -lambda[j];
  project(v, pairs);
  if (phi(u, v) != -1) {
    throw InternalInvariantError("dual vector lost its pairing under projection");
  }
  return v;
}

}  // namespace

SymplecticMap symplectic_completion(const HomologyClass& gamma) {
  const GenusContext ctx = gamma.ctx();
  const std::size_t n = ctx.dim();
  if (gamma.is_zero()) {
    throw ValidationError("symplectic completion needs a nonzero class");
  }
  if (!is_primitive(gamma)) {
    throw ValidationError("symplectic completion needs a primitive class");
  }

  std::vector<Pair> pairs;
  pairs.push_back(Pair{gamma.coeffs(), dual_vector(gamma.coeffs(), pairs)});
  for (int k = 2; k <= ctx.genus; ++k) {
    // Lowest-index basis vector with nonzero projection into the remaining
    // orthogonal complement; its primitive part starts the next pair.
    std::vector<Integer> u;
    for (std::size_t j = 0; j < n; ++j) {
      std::vector<Integer> e(n, Integer(0));
      e[j] = 1;
      project(e, pairs);
      if (!all_zero(e)) {
        u = std::move(e);
        break;
      }
    }
    if (u.empty()) {
      throw InternalInvariantError("symplectic complement ran out of rank");
    }
    detail::reduce_content(u);
    pairs.push_back(Pair{u, dual_vector(u, pairs)});
  }

  // Columns gamma, dual, u2, v2, ... form a symplectic basis B; B^-1 is the
  // completion.
  std::vector<std::vector<Integer>> basis(n, std::vector<Integer>(n, Integer(0)));
  for (std::size_t p = 0; p < pairs.size(); ++p) {
    for (std::size_t i = 0; i < n; ++i) {
      basis[i][2 * p] = pairs[p].u[i];
      basis[i][2 * p + 1] = pairs[p].v[i];
    }
  }
  if (!preserves_form(ctx, basis)) {
    throw InternalInvariantError("completed basis is not symplectic");
  }
  SymplecticMap b(ctx, std::move(basis), SymplecticMap::unchecked_t{});
  SymplecticMap s = b.inverse();
  if (!(s.apply(gamma) == HomologyClass::basis(ctx, 0))) {
    throw InternalInvariantError("completion failed to normalize the class to a1");
  }
  return s;
}

}  // namespace lefsig
