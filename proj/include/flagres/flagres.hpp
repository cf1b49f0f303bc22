#pragma once

#include "coords.hpp"
#include "errors.hpp"
#include "iwasawa.hpp"
#include "json_io.hpp"
#include "matrix.hpp"
#include "resolution.hpp"
#include "sampling.hpp"
#include "subgroups.hpp"
#include "tolerances.hpp"
#include "verify.hpp"
#include "weyl.hpp"
