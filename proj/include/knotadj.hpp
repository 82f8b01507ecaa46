#pragma once

#include "knotadj/adjacency.hpp"
#include "knotadj/braid.hpp"
#include "knotadj/diagram.hpp"
#include "knotadj/fiberlab.hpp"
#include "knotadj/json_io.hpp"
#include "knotadj/laurent.hpp"
#include "knotadj/matrix.hpp"
#include "knotadj/seifert.hpp"
#include "knotadj/surgery.hpp"
#include "knotadj/table.hpp"
