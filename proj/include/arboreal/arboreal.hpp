#pragma once

#include "ck.hpp"
#include "doubling.hpp"
#include "enveloping.hpp"
#include "grafting.hpp"
#include "lincomb.hpp"
#include "relations.hpp"
#include "text.hpp"
#include "trees.hpp"
#include "verifier.hpp"
