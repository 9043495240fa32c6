#pragma once

#include "upoly/errors.hpp"
#include "upoly/qarith.hpp"
#include "upoly/posets.hpp"
#include "upoly/polytope.hpp"
#include "upoly/stats.hpp"
#include "upoly/chars.hpp"
#include "upoly/fforacle.hpp"
#include "upoly/serialize.hpp"
#include "upoly/verify.hpp"
