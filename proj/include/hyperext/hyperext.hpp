#pragma once

#include "hyperext/bigint.hpp"
#include "hyperext/cliques.hpp"
#include "hyperext/errors.hpp"
#include "hyperext/extremal.hpp"
#include "hyperext/hypergraph.hpp"
#include "hyperext/inequalities.hpp"
#include "hyperext/io.hpp"
#include "hyperext/matchings.hpp"
#include "hyperext/random.hpp"
#include "hyperext/report_json.hpp"
#include "hyperext/shifting.hpp"
#include "hyperext/sweep.hpp"
#include "hyperext/verifier.hpp"
#include "hyperext/vertex_set.hpp"
