#pragma once

#include "qxopt/bench.hpp"
#include "qxopt/circuit.hpp"
#include "qxopt/distribution.hpp"
#include "qxopt/error.hpp"
#include "qxopt/io.hpp"
#include "qxopt/nonclassicality.hpp"
#include "qxopt/peephole.hpp"
#include "qxopt/placement.hpp"
#include "qxopt/qasm.hpp"
#include "qxopt/random_circuit.hpp"
#include "qxopt/realization.hpp"
#include "qxopt/self_check.hpp"
#include "qxopt/simulator.hpp"
#include "qxopt/topology.hpp"
