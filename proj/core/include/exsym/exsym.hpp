#pragma once

#include "exsym/error.hpp"
#include "exsym/gallery.hpp"
#include "exsym/immersion.hpp"
#include "exsym/lie_algebra.hpp"
#include "exsym/linalg.hpp"
#include "exsym/matrix.hpp"
#include "exsym/orbit.hpp"
#include "exsym/polynomial.hpp"
#include "exsym/rational.hpp"
#include "exsym/report.hpp"
#include "exsym/shape.hpp"
#include "exsym/triple.hpp"
