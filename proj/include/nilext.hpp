#pragma once

#include "nilext/rational.hpp"
#include "nilext/cyclotomic.hpp"
#include "nilext/prime_field.hpp"
#include "nilext/field.hpp"
#include "nilext/multipoly.hpp"
#include "nilext/expr.hpp"
#include "nilext/linalg.hpp"
#include "nilext/algebra.hpp"
#include "nilext/identities.hpp"
#include "nilext/fingerprint.hpp"
#include "nilext/extensions.hpp"
#include "nilext/search.hpp"
#include "nilext/iso.hpp"
#include "nilext/orbits.hpp"
#include "nilext/catalog.hpp"
#include "nilext/report.hpp"
#include "nilext/verify.hpp"
