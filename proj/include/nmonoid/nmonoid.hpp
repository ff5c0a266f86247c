#pragma once

#include "nmonoid/arithmetical.hpp"
#include "nmonoid/complex.hpp"
#include "nmonoid/error.hpp"
#include "nmonoid/length_set.hpp"
#include "nmonoid/length_table.hpp"
#include "nmonoid/monoid.hpp"
#include "nmonoid/omission.hpp"
#include "nmonoid/parallel.hpp"
#include "nmonoid/serialize.hpp"
