#pragma once

#include "blossom/alt_search.hpp"
#include "blossom/blossom_assembly.hpp"
#include "blossom/certify.hpp"
#include "blossom/contraction.hpp"
#include "blossom/errors.hpp"
#include "blossom/graph.hpp"
#include "blossom/paths.hpp"
