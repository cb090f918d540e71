#pragma once

#include "ringcodes/bigint.hpp"
#include "ringcodes/code.hpp"
#include "ringcodes/enumerate.hpp"
#include "ringcodes/error.hpp"
#include "ringcodes/identities.hpp"
#include "ringcodes/io.hpp"
#include "ringcodes/matrix.hpp"
#include "ringcodes/ring.hpp"
