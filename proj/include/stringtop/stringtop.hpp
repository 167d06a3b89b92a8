// Umbrella header.
#pragma once

#include "bialgebra.hpp"
#include "combo.hpp"
#include "core.hpp"
#include "diagrams.hpp"
#include "rays.hpp"
#include "reports.hpp"
#include "sampler.hpp"
#include "surface.hpp"
#include "verify.hpp"
#include "words.hpp"
