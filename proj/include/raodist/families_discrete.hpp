#pragma once

#include "raodist/family.hpp"

namespace raodist {

/// Embedding of a probability vector onto the radius-2 sphere:
/// f(p) = (2 sqrt(p_1), ..., 2 sqrt(p_n)), |f(p)| = 2.
Vec simplex_sphere_embedding(const Vec& probs);

/// Hellinger distance sqrt(sum (sqrt(p_i) - sqrt(q_i))^2). The doubled
/// Hellinger distance is the Euclidean chord under the sphere embedding
/// and lower-bounds the categorical Fisher-Rao arc.
double hellinger_distance(const Vec& p_probs, const Vec& q_probs);

/// Full probability vector (p_1, ..., p_n) from the n-1 free simplex
/// coordinates; p_n = 1 - sum.
Vec simplex_full(const Vec& free_coords);

FamilyPtr make_binomial(int n);
FamilyPtr make_poisson();
FamilyPtr make_geometric();
FamilyPtr make_negative_binomial(int r);
FamilyPtr make_categorical(int n);
FamilyPtr make_multinomial(int n, int trials);
FamilyPtr make_negative_multinomial(int n, int x_n);

} // namespace raodist
