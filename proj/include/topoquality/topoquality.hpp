#pragma once

#include "topoquality/block_function.hpp"
#include "topoquality/core.hpp"
#include "topoquality/errors.hpp"
#include "topoquality/induced.hpp"
#include "topoquality/persistence.hpp"
#include "topoquality/quality.hpp"
#include "topoquality/rips.hpp"
