#pragma once

#include "errors.hpp"
#include "field.hpp"
#include "filtered.hpp"
#include "format.hpp"
#include "laurent.hpp"
#include "parse.hpp"
#include "report.hpp"
#include "selfcheck.hpp"
#include "special.hpp"
#include "spectral.hpp"
#include "verdict.hpp"
#include "verification.hpp"
#include "version.hpp"
