#pragma once

#include "bicycle/errors.hpp"
#include "bicycle/gaussian.hpp"
#include "bicycle/gf2.hpp"
#include "bicycle/matrix_text.hpp"
#include "bicycle/profile.hpp"
#include "bicycle/projection.hpp"
#include "bicycle/qform.hpp"
#include "bicycle/subspace.hpp"
#include "bicycle/tripartition.hpp"
#include "bicycle/tutte.hpp"
