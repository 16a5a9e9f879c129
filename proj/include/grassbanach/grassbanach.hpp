#pragma once

// Umbrella header for the Grassmann-Banach algebra library.

#include "errors.hpp"
#include "field.hpp"
#include "monomial.hpp"
#include "ordering.hpp"
#include "element.hpp"
#include "tensor.hpp"
#include "truncated_poly.hpp"
#include "extension.hpp"
#include "json_io.hpp"
#include "expr.hpp"
#include "checks.hpp"
