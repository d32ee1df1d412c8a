#pragma once

// Core library
#include "wreathkit/arith.hpp"
#include "wreathkit/element.hpp"
#include "wreathkit/group.hpp"

// Groups
#include "wreathkit/abelian.hpp"
#include "wreathkit/baumslag_solitar.hpp"
#include "wreathkit/direct_product.hpp"
#include "wreathkit/solvable.hpp"
#include "wreathkit/wreath.hpp"

// Algorithms on wreath products
#include "wreathkit/conjugacy.hpp"
#include "wreathkit/power.hpp"
#include "wreathkit/wreath_element.hpp"

// Text front end and cross-checks (query.hpp additionally needs nlohmann/json)
#include "wreathkit/dsl.hpp"
#include "wreathkit/oracle.hpp"
#include "wreathkit/selftest.hpp"
