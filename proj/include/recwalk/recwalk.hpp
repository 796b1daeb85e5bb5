#pragma once

#include "recwalk/errors.hpp"
#include "recwalk/rng.hpp"
#include "recwalk/parallel.hpp"
#include "recwalk/summary.hpp"
#include "recwalk/step_laws.hpp"
#include "recwalk/walk.hpp"
#include "recwalk/exact.hpp"
#include "recwalk/ladder.hpp"
#include "recwalk/brute_force.hpp"
#include "recwalk/transient.hpp"
#include "recwalk/mittag_leffler.hpp"
#include "recwalk/deviations.hpp"
#include "recwalk/ctrw.hpp"
#include "recwalk/config.hpp"
