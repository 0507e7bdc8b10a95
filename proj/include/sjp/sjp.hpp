#pragma once

// Umbrella header.

#include "field.hpp"
#include "zpoly.hpp"
#include "element.hpp"
#include "ore.hpp"
#include "rewrite.hpp"
#include "linalg.hpp"
#include "jordan.hpp"
#include "structure.hpp"
#include "maps.hpp"
#include "hopf.hpp"
#include "expr.hpp"
#include "serialize.hpp"
#include "random.hpp"
