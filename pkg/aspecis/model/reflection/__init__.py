from .core import *
from .basics import YamlReflection, SelectiveReflection, to_yaml, dump_yaml
