#pragma once

#include "menhir/algebra.hpp"
#include "menhir/deformation.hpp"
#include "menhir/errors.hpp"
#include "menhir/identity_lab.hpp"
#include "menhir/loop.hpp"
#include "menhir/moller.hpp"
#include "menhir/sampling.hpp"
#include "menhir/scaling.hpp"
