#ifndef FPURE_FPURE_HPP
#define FPURE_FPURE_HPP

#include "error.hpp"
#include "field.hpp"
#include "frobenius.hpp"
#include "groebner.hpp"
#include "invariants.hpp"
#include "limits.hpp"
#include "linalg.hpp"
#include "localcoh.hpp"
#include "monomial.hpp"
#include "parser.hpp"
#include "polynomial.hpp"
#include "problem.hpp"
#include "regularity.hpp"
#include "report.hpp"
#include "ring.hpp"

#endif
