#pragma once

#include "toruslift/bundles.hpp"
#include "toruslift/doubled.hpp"
#include "toruslift/homspaces.hpp"
#include "toruslift/matrix.hpp"
#include "toruslift/normal_forms.hpp"
#include "toruslift/numeric.hpp"
#include "toruslift/poly.hpp"
#include "toruslift/tfold.hpp"
#include "toruslift/torus.hpp"
