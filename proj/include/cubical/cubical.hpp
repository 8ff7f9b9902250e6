#pragma once

#include "cubical/classify.hpp"
#include "cubical/cubical_complex.hpp"
#include "cubical/enumerative.hpp"
#include "cubical/errors.hpp"
#include "cubical/generators.hpp"
#include "cubical/integer.hpp"
#include "cubical/io.hpp"
#include "cubical/macaulay.hpp"
#include "cubical/report.hpp"
#include "cubical/simplicial_complex.hpp"
#include "cubical/topology.hpp"
#include "cubical/vectors.hpp"
#include "cubical/verify.hpp"
