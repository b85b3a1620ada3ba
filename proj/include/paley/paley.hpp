#pragma once

#include "paley/error.hpp"
#include "paley/integer.hpp"
#include "paley/ff_core.hpp"
#include "paley/quadforms.hpp"
#include "paley/local_rings.hpp"
#include "paley/graph_oracle.hpp"
#include "paley/closed_forms.hpp"
#include "paley/towers.hpp"
#include "paley/report.hpp"
#include "paley/cli.hpp"
