#pragma once

#include "belt/assignment.hpp"
#include "belt/bounds.hpp"
#include "belt/data.hpp"
#include "belt/decode.hpp"
#include "belt/errors.hpp"
#include "belt/hardness.hpp"
#include "belt/harness.hpp"
#include "belt/instance.hpp"
#include "belt/io.hpp"
#include "belt/normal_form.hpp"
#include "belt/rng.hpp"
#include "belt/sequence.hpp"
#include "belt/solvers.hpp"
