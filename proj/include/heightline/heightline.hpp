#pragma once

#include "heightline/closed_forms.hpp"
#include "heightline/height.hpp"
#include "heightline/modular.hpp"
#include "heightline/plot.hpp"
#include "heightline/projective_space.hpp"
#include "heightline/rational.hpp"
#include "heightline/spectrum.hpp"
#include "heightline/spectrum_io.hpp"
