#pragma once

#include "numsg/error.hpp"
#include "numsg/semigroup.hpp"
#include "numsg/monomial.hpp"
#include "numsg/binomial.hpp"
#include "numsg/groebner.hpp"
#include "numsg/format.hpp"
#include "numsg/toric.hpp"
#include "numsg/naive.hpp"
#include "numsg/report.hpp"
#include "numsg/batch.hpp"
