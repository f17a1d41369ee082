#include "lefsig/wall_step.hpp"

#include <utility>

#include "lefsig/errors.hpp"
#include "lefsig/exact_linalg.hpp"

namespace lefsig {

ComplementPresentation build_presentation(const SymplecticMap& phi) {
  const GenusContext ctx = phi.ctx();
  const std::size_t n = ctx.dim();  // surface generators; b1' is slot n
  ComplementPresentation p{ctx, {}, {}, {}};
  p.relations.reserve(n);
  for (std::size_t k = 0; k < n; ++k) {
    std::vector<Integer> rel(n + 1, Integer(0));
    if (k == 1) {
      // b1' = phi(b1)
      for (std::size_t i = 0; i < n; ++i) rel[i] = -phi.at(i, 1);
      rel[n] = 1;
    } else {
      // e_k = phi(e_k)
      for (std::size_t i = 0; i < n; ++i) rel[i] = -phi.at(i, k);
      rel[k] += 1;
    }
    p.relations.push_back(std::move(rel));
  }
  p.img_l.assign(n + 1, Integer(0));
  p.img_l[0] = 1;  // a1
  p.img_m.assign(n + 1, Integer(0));
  p.img_m[1] = 1;  // b1 - b1'
  p.img_m[n] = -1;
  return p;
}

KernelLine kernel_line(const ComplementPresentation& p) {
  const std::size_t height = p.img_l.size();
  // Columns: img_l, img_m, then the relations. A kernel vector
  // (u, v, c_1, ...) witnesses u img_l + v img_m in span(relations).
  std::vector<std::vector<Integer>> rows(height,
                                         std::vector<Integer>(2 + p.relations.size()));
  for (std::size_t i = 0; i < height; ++i) {
    rows[i][0] = p.img_l[i];
    rows[i][1] = p.img_m[i];
    for (std::size_t j = 0; j < p.relations.size(); ++j) {
      if (p.relations[j].size() != height) {
        throw ValidationError("presentation relation has wrong length");
      }
      rows[i][2 + j] = p.relations[j][i];
    }
  }
  const auto kernel = detail::integer_kernel_basis(std::move(rows), 2 + p.relations.size());

  // The solution line is the projection of the kernel onto (u, v).
  Integer u = 0;
  Integer v = 0;
  bool found = false;
  for (const auto& vec : kernel) {
    const Integer& cu = vec[0];
    const Integer& cv = vec[1];
    if (cu == 0 && cv == 0) continue;
    if (!found) {
      u = cu;
      v = cv;
      found = true;
    } else if (cu * v != cv * u) {
      throw InternalInvariantError("kernel line has dimension 2");
    }
  }
  if (!found) {
    throw InternalInvariantError("kernel line has dimension 0");
  }
  const Integer g = gcd(u, v);
  u /= g;
  v /= g;
  if (u < 0 || (u == 0 && v < 0)) {
    u = -u;
    v = -v;
  }
  return KernelLine{std::move(u), std::move(v)};
}

namespace {

int sign_of_product(const Integer& p, const Integer& q) {
  return signum(p) * signum(q);
}

StepOutcome framed_outcome(KernelLine line, bool positive_framing_change) {
  // -1-framed handle: [l] = [l'] - [m'], [m] = [m'], so u[l'] + v[m'] reads
  // (p, q) = (u, u+v) in the new basis. +1-framed (negative twist):
  // [l] = [l'] + [m'] gives (p, q) = (u, v-u).
  Integer p = line.u;
  Integer q = positive_framing_change ? Integer(line.v - line.u) : Integer(line.u + line.v);
  StepOutcome out;
  out.increment = -sign_of_product(p, q);
  out.kernel = std::move(line);
  out.framed = std::array<Integer, 2>{std::move(p), std::move(q)};
  return out;
}

}  // namespace

StepOutcome relative_signature_using(const SymplecticMap& completion,
                                     const SymplecticMap& phi, const HomologyClass& gamma) {
  if (!(completion.ctx() == phi.ctx()) || !(gamma.ctx() == phi.ctx())) {
    throw ValidationError("genus context mismatch in relative signature");
  }
  if (!(completion.apply(gamma) == HomologyClass::basis(gamma.ctx(), 0))) {
    throw ValidationError("completion does not send the cycle class to a1");
  }
  const SymplecticMap conjugated = compose(compose(completion, phi), completion.inverse());
  return framed_outcome(kernel_line(build_presentation(conjugated)), false);
}

StepOutcome relative_signature(const SymplecticMap& phi, const VanishingCycle& cycle) {
  if (cycle.is_separating()) {
    StepOutcome out;
    out.increment = -1;
    return out;
  }
  return relative_signature_using(symplectic_completion(cycle.cls()), phi, cycle.cls());
}

StepOutcome relative_signature_achiral(const SymplecticMap& phi, const VanishingCycle& cycle,
                                       bool negative) {
  if (!negative) {
    return relative_signature(phi, cycle);
  }
  if (cycle.is_separating()) {
    // Mirror of the separating rule: the kernel is spanned by [l'], which
    // reads [l] - [m] under the +1-framing identification, so the correction
    // is +1.
    StepOutcome out;
    out.increment = 1;
    return out;
  }
  const SymplecticMap completion = symplectic_completion(cycle.cls());
  const SymplecticMap conjugated = compose(compose(completion, phi), completion.inverse());
  return framed_outcome(kernel_line(build_presentation(conjugated)), true);
}

}  // namespace lefsig
