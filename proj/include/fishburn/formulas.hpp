#pragma once

// Closed-form generating functions for ascent sequences / (2+2)-free posets
// and exact truncated checks of the functional equations relating them.
// Everything is computed in Z[[t,u,v,z,x]] at joint truncation; identities
// with non-unit denominators are checked in multiplied-through form, so all
// arithmetic stays over the integers.

#include "fishburn/report.hpp"
#include "fishburn/series.hpp"

namespace fishburn::formulas {

using report::Report;
using series::Series;

// delta_k = u - (1-t)^k (u-1),  gamma_k = u - (1-zt)(1-t)^{k-1}(u-1);
// index 0 gives the constant 1.  The barred versions substitute u := uv.
Series delta(int k, int order);
Series gamma(int k, int order);
Series delta_bar(int k, int order);
Series gamma_bar(int k, int order);

// Run-component series at v=1:
//   G_r(t,u,1,z) = t^{r+1} z^r u(1-u) *
//       sum_{s>=0} u^s (1-t)^s / (delta_s delta_{s+1} prod_{i<=s+1} gamma_i),
// truncated at s = order (sound: the s-th summand carries u^{s+1}).
Series gr_u1(int r, int order);

// Four-variable functional equation for the run component, against the
// enumeration oracle:
//   (v-1-tv(1-u)) G_r = (v-1) t^{r+1} u v z^r
//       + t((v-1)z - v) G_r(t,u,1,z) + t u v^2 G_r(t,uv,1,z).
Report check_lemma2(int r, int order);

// Kernel-form consistency of the closed form gr_u1 under u := u/delta_1:
//   delta_1 gamma_1 G_r(t,u,1,z)
//     = t^{r+1} z^r u (1-u) + u G_r(t, u/delta_1, 1, z).
Report check_kernel_relation(int r, int order);

// Closed form for the full run component, multiplied through by the kernel
// factor v*delta_1 - 1 and checked against the enumeration oracle.
Report check_theorem_gr(int r, int order);

// Same for the five-variable master series (x marks run), plus the
// assembly identity G = 1/(1-tz) + sum_{r>=1} (tz)^{r-1} x^r G_1(t,u,v,z).
Report check_theorem_main(int order);

// Ascent/last/zeros generating function at v=1:
//   H(u,1,z,t) = sum_{s>=0} zt(1-u) u^s (1-t)^s
//                / (delta_s prod_{i<=s+1} gamma_i).
Series h_closed(int order);

// Functional equation for H against the enumeration oracle.
Report check_lemma_h(int order);

// Auxiliary kernel family: series form (truncated at k = order) and the
// closed polynomial form
//   psi_{m+1} = -(sum_{j=0}^{m} (u-1)^j (1-zt)^j u^{m-j}
//                prod_{i=j+1}^{m} (1-(1-t)^i)).
Series psi_series(int m, int order);
Series psi_poly(int m, int order);

// psi_series == psi_poly plus the multiplied-through recursion
//   gamma_1 psi = (u-1)^{m+1}(1-zt)^{m+1} + u delta_1^m psi(u/delta_1)
// for both forms.
Report check_psi(int m, int order);

// Bivariate count of (2+2)-free posets by size (t) and minimal elements (z):
//   P(t,z) = 1 + sum_{n>=0} zt/(1-zt)^{n+1} prod_{i=1}^{n} (1-(1-t)^i).
Series p_tz(int order);

// Univariate count: P(t) = sum_{n>=0} prod_{i=1}^{n} (1-(1-t)^i).
Series p_t(int order);

// Conjectured product form sum_{n>=0} prod_{i=1}^{n} (1-(1-t)^{i-1}(1-zt)).
Series p_tz_conjecture(int order);

// P(t) = (1/t) dP(t,z)/dz at z=0, exact through t^order.
Report check_pt_from_ptz(int order);

// p_tz vs p_tz_conjecture; evidence bounded by the truncation order only.
Report check_conjecture(int order);

// Shared helper: equality report with first mismatching monomial witness.
Report compare_series(const std::string& identity, nlohmann::json params,
                      const Series& lhs, const Series& rhs);

}  // namespace fishburn::formulas
