#ifndef U6N_U6N_HPP
#define U6N_U6N_HPP

#include "u6n/group.hpp"
#include "u6n/divisors.hpp"
#include "u6n/subgroup.hpp"
#include "u6n/lattice.hpp"
#include "u6n/chain_dp.hpp"
#include "u6n/fuzzy_oracle.hpp"

#endif  // U6N_U6N_HPP
