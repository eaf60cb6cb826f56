#pragma once

#include "mclain/element.hpp"
#include "mclain/error.hpp"
#include "mclain/factorization.hpp"
#include "mclain/io.hpp"
#include "mclain/relation.hpp"
#include "mclain/ring.hpp"
#include "mclain/structure.hpp"
