#pragma once

#include "chebyshev.hpp"
#include "curves.hpp"
#include "element.hpp"
#include "errors.hpp"
#include "expression.hpp"
#include "laurent.hpp"
#include "oracle.hpp"
#include "product.hpp"
#include "render.hpp"
#include "verify.hpp"
