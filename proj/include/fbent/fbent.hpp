#pragma once

#include "fbent/belief.hpp"
#include "fbent/bpa_json.hpp"
#include "fbent/combination.hpp"
#include "fbent/csv.hpp"
#include "fbent/error.hpp"
#include "fbent/evidence.hpp"
#include "fbent/experiments.hpp"
#include "fbent/fb_entropy.hpp"
#include "fbent/measures.hpp"
#include "fbent/process.hpp"
#include "fbent/transforms.hpp"
