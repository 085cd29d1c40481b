#pragma once

#include "abacus.hpp"
#include "affine.hpp"
#include "bruhat.hpp"
#include "cores.hpp"
#include "error.hpp"
#include "nodes.hpp"
#include "partition.hpp"
