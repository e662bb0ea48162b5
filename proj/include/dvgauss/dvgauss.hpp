#pragma once

#include "dvgauss/checks.hpp"
#include "dvgauss/dynamics.hpp"
#include "dvgauss/gaussian.hpp"
#include "dvgauss/io.hpp"
#include "dvgauss/lattice.hpp"
#include "dvgauss/linalg.hpp"
#include "dvgauss/operators.hpp"
#include "dvgauss/theta.hpp"
#include "dvgauss/thermal.hpp"
#include "dvgauss/wigner.hpp"
