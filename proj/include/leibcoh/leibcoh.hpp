#ifndef LEIBCOH_LEIBCOH_HPP
#define LEIBCOH_LEIBCOH_HPP

#include "leibcoh/algebra.hpp"
#include "leibcoh/catalog.hpp"
#include "leibcoh/cochain.hpp"
#include "leibcoh/deformation.hpp"
#include "leibcoh/error.hpp"
#include "leibcoh/koszul.hpp"
#include "leibcoh/linalg.hpp"
#include "leibcoh/matrix.hpp"
#include "leibcoh/polynomial.hpp"
#include "leibcoh/polyverify.hpp"
#include "leibcoh/scalar.hpp"

#endif
