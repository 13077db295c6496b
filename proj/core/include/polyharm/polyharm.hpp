#pragma once

#include "polyharm/catalog.hpp"
#include "polyharm/classes.hpp"
#include "polyharm/close_to_convex.hpp"
#include "polyharm/errors.hpp"
#include "polyharm/geometry.hpp"
#include "polyharm/grid.hpp"
#include "polyharm/map.hpp"
#include "polyharm/mapping_document.hpp"
#include "polyharm/random.hpp"
#include "polyharm/render.hpp"
#include "polyharm/series.hpp"
