# aspecis, a model weaving toolbox for cooperative requirements.
#
# This file is part of aspecis.
#
# aspecis is free software: you can redistribute it and/or modify
# it under the terms of the GNU General Public License version 3 as
# published by the Free Software Foundation.
#
# aspecis is distributed in the hope that it will be useful,
# but WITHOUT ANY WARRANTY; without even the implied warranty of
# MERCHANTABILITY or FITNESS FOR A PARTICULAR PURPOSE. See the
# GNU General Public License for more details.
#
# You should have received a copy of the GNU General Public License
# along with aspecis. If not, see <http://www.gnu.org/licenses/>.

import os

rootpath = os.path.dirname(os.path.dirname(os.path.abspath(__file__)))
metamodelpath = os.path.join(rootpath, 'metamodels')
fixturepath = os.path.join(rootpath, 'fixtures')

from . import errors
from . import km3
from . import model
from . import awm
from . import pointcut
from . import weaver

from .km3 import parse_km3, validate_metamodel
from .model import parse_model, check_conformance, canonical_serialize, element_id, resolve_id
from .awm import builtin_metamodels, open_weaving, ModelRoleSet, load_role_set
from .weaver import weave
