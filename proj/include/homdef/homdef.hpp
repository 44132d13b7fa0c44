#pragma once

#include "errors.hpp"
#include "rational.hpp"
#include "exactla.hpp"
#include "algebra.hpp"
#include "catalog.hpp"
#include "cohomology.hpp"
#include "base.hpp"
#include "deformation.hpp"
#include "obstruction.hpp"
