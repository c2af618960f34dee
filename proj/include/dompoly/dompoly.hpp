#ifndef DOMPOLY_DOMPOLY_HPP
#define DOMPOLY_DOMPOLY_HPP

#include "dompoly/algorithms.hpp"
#include "dompoly/errors.hpp"
#include "dompoly/formats.hpp"
#include "dompoly/graph.hpp"
#include "dompoly/identities.hpp"
#include "dompoly/polynomial.hpp"
#include "dompoly/sets.hpp"

#endif // DOMPOLY_DOMPOLY_HPP
