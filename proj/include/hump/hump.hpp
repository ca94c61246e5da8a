#pragma once

#include "hump/bijections.hpp"
#include "hump/certify.hpp"
#include "hump/closed_forms.hpp"
#include "hump/error.hpp"
#include "hump/exact_int.hpp"
#include "hump/hook_tableaux.hpp"
#include "hump/hump_stats.hpp"
#include "hump/path_core.hpp"
#include "hump/series.hpp"
#include "hump/tables.hpp"
#include "hump/triangle.hpp"
#include "hump/verify.hpp"
