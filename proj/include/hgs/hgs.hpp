#pragma once

#include "hgs/bounds.hpp"
#include "hgs/dense_oracle.hpp"
#include "hgs/errors.hpp"
#include "hgs/generators.hpp"
#include "hgs/hypergraph.hpp"
#include "hgs/report.hpp"
#include "hgs/spectral.hpp"
