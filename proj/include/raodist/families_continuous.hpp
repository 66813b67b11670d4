#pragma once

#include "raodist/family.hpp"

namespace raodist {

FamilyPtr make_exponential();
FamilyPtr make_rayleigh();
FamilyPtr make_erlang(int k);
FamilyPtr make_log_gaussian();
FamilyPtr make_inverse_gaussian();
FamilyPtr make_gumbel();
FamilyPtr make_frechet();
FamilyPtr make_weibull();
FamilyPtr make_reversed_weibull();
FamilyPtr make_pareto();
FamilyPtr make_power_function();

} // namespace raodist
