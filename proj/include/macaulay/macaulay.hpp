#pragma once

#include "macaulay/binom.hpp"
#include "macaulay/elimination.hpp"
#include "macaulay/gaussian.hpp"
#include "macaulay/hermitian.hpp"
#include "macaulay/ideal.hpp"
#include "macaulay/io.hpp"
#include "macaulay/monomial.hpp"
#include "macaulay/oracle.hpp"
#include "macaulay/polynomial.hpp"
#include "macaulay/report.hpp"
