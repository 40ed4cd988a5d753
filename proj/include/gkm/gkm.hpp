#pragma once

#include "gkm/error.hpp"
#include "gkm/linalg.hpp"
#include "gkm/graph.hpp"
#include "gkm/axial.hpp"
#include "gkm/congruence.hpp"
#include "gkm/axgroup.hpp"
#include "gkm/extension.hpp"
#include "gkm/families.hpp"
#include "gkm/io.hpp"
