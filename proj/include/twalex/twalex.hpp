#pragma once

#include "twalex/bigfloat.hpp"
#include "twalex/error.hpp"
#include "twalex/group.hpp"
#include "twalex/invariant.hpp"
#include "twalex/job.hpp"
#include "twalex/laurent.hpp"
#include "twalex/matrix.hpp"
#include "twalex/number_field.hpp"
#include "twalex/polynomial.hpp"
#include "twalex/rep.hpp"
#include "twalex/volume.hpp"
