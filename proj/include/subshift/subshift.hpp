#pragma once

#include "subshift/automorphism.hpp"
#include "subshift/block_code.hpp"
#include "subshift/branch.hpp"
#include "subshift/construction.hpp"
#include "subshift/construction_verify.hpp"
#include "subshift/error.hpp"
#include "subshift/group.hpp"
#include "subshift/io.hpp"
#include "subshift/language.hpp"
#include "subshift/report.hpp"
#include "subshift/thresholds.hpp"
#include "subshift/word.hpp"
