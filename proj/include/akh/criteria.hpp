#ifndef AKH_CRITERIA_HPP
#define AKH_CRITERIA_HPP

#include <string>
#include <vector>

#include "akh/algebra.hpp"
#include "akh/laurent.hpp"
#include "akh/linalg.hpp"
#include "akh/specialization.hpp"

namespace akh {

/// f_{m,r,i} = prod_{j != i} prod_{k=1-r}^{r-1} (u_i q^k - u_j).
LaurentPoly f_poly(int m, int r, int i);
/// f_{m,r} = prod_{i<j} prod_{k=1-r}^{r-1} (u_i q^k - u_j).
LaurentPoly f_poly(int m, int r);

/// d_{S_r} = sum over w of q^{l(w)}; computed by the explicit length sum.
LaurentPoly poincare_sym(int r, int num_u);
/// Product form prod_{i=1}^r (1 + q + ... + q^{i-1}), the cross-check.
LaurentPoly poincare_sym_product(int r, int num_u);

/// d_W = f_{m,r} * d_{S_r}.
LaurentPoly d_w_poly(int m, int r);

/// sum over compositions lambda of r into m parts of prod_i (lambda_i!):
/// the dimension of the direct sum of the parabolic Hecke subalgebras.
long morita_target_dim(int m, int r);

/// Default test specialization: rationals, q = 2, u_i = i-th prime >= 3.
Specialization<Rational> generic_spec(int m);

/// A named point of the fixed verification grid.
struct SpecPoint {
    std::string name;
    Specialization<Rational> spec;
};

/// The fixed, versioned specialization grid: generic points, q roots of
/// unity, and u_i = q^k u_j collisions. At least 10 points for every m.
std::vector<SpecPoint> criteria_grid(int m);

/// Trace-form oracle over the rationals: the algebra is semisimple iff the
/// Gram matrix G_{xy} = tr(lambda(b_x) lambda(b_y)) of the regular trace form
/// is nonsingular. Characteristic zero only.
bool gram_nondegenerate(const Context<Rational>& ctx);

} // namespace akh

#endif
