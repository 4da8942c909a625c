#pragma once

#include "kkr/box_ball.hpp"
#include "kkr/crystal.hpp"
#include "kkr/error.hpp"
#include "kkr/kkr_classical.hpp"
#include "kkr/kkr_vertex.hpp"
#include "kkr/notation.hpp"
#include "kkr/partitions.hpp"
#include "kkr/rc_json.hpp"
#include "kkr/rigged_config.hpp"
