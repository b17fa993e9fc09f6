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

from .builtin import builtin_metamodels, builtin, CORE, ASPECT, WEAVING, WOVEN, BUILTIN_FILES
from .weaving import ModelRoleSet, WeavingView, load_role_set, check_roles, open_weaving, link_kind
from .weaving import ROOT_TYPE, LINK_TYPE
from . import uml
from . import aspect
from . import weaving
from .aspect import ADVICE_KINDS
