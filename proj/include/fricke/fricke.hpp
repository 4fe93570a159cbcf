#pragma once

#include "fricke/bounds.hpp"
#include "fricke/eisenstein.hpp"
#include "fricke/errors.hpp"
#include "fricke/forms.hpp"
#include "fricke/numeric.hpp"
#include "fricke/qseries.hpp"
#include "fricke/report.hpp"
#include "fricke/spaces.hpp"
#include "fricke/zeros.hpp"
