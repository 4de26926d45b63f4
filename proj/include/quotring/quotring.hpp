#pragma once

#include "quotring/bigint.hpp"
#include "quotring/errors.hpp"
#include "quotring/format.hpp"
#include "quotring/integers.hpp"
#include "quotring/linsolve.hpp"
#include "quotring/matrix.hpp"
#include "quotring/poly_fp.hpp"
#include "quotring/residue.hpp"
#include "quotring/ring.hpp"
#include "quotring/smith.hpp"
#include "quotring/zelisko.hpp"
