#pragma once

#include "raodist/family.hpp"

namespace raodist {

/// Half-vectorisation of a symmetric m x m matrix: upper triangle in row
/// order (1,1),(1,2),...,(1,m),(2,2),...,(m,m).
Vec vech(const Mat& A);

/// Inverse of vech: symmetric matrix from its m(m+1)/2 upper-triangle
/// entries.
Mat unvech(const Vec& v, int m);

/// The unique m^2 x m(m+1)/2 zero/one matrix with D vech(A) = vec(A) for
/// every symmetric A: row (j-1)m+i carries a 1 in the column of
/// (min(i,j), max(i,j)).
Mat duplication_matrix(int m);

/// Fisher matrix (n/2) D^T (Sigma^-1 kron Sigma^-1) D in vech coordinates,
/// shared by the Wishart and inverse-Wishart manifolds.
Mat wishart_fisher_matrix(const Mat& sigma, double n);

/// Eigenvalues of Sigma1^(-1/2) Sigma2 Sigma1^(-1/2), computed by Cholesky
/// whitening L^-1 Sigma2 L^-T followed by a symmetric eigensolve. All
/// positive for SPD inputs. Throws DimensionError on size mismatch.
Vec spd_geodesic_eigenvalues(const Mat& sigma1, const Mat& sigma2);

/// Distance sqrt((n/2) sum_k log^2 lambda_k); serves both Wishart and
/// inverse Wishart. Eigenvalues are clamped below at 1e-300 before log.
double wishart_distance_matrix(const Mat& sigma1, const Mat& sigma2, double n);

/// Independent cross-check: generalised eigenvalues det(Sigma2 - lambda
/// Sigma1) = 0 from the explicit characteristic-polynomial closed forms
/// (quadratic for m=2, cubic for m=3), no matrix library involved.
Vec generalized_eigenvalues_charpoly(const Mat& sigma1, const Mat& sigma2);

FamilyPtr make_wishart(int m, double n);
FamilyPtr make_inverse_wishart(int m, double n);

} // namespace raodist
