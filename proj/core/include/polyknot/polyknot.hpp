#pragma once

#include "polyknot/certifier.hpp"
#include "polyknot/deformation.hpp"
#include "polyknot/error.hpp"
#include "polyknot/interval.hpp"
#include "polyknot/io.hpp"
#include "polyknot/knot.hpp"
#include "polyknot/metric.hpp"
#include "polyknot/random.hpp"
#include "polyknot/rational.hpp"
#include "polyknot/scalar.hpp"
#include "polyknot/topology.hpp"
