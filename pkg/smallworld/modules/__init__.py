"""
Small World toolkit modules package.
"""

from .errors import SmallWorldError
from .graph import Graph, ComponentLabeling, StructureAnalyzer
from .edge_list import EdgeListCodec
from .random_walk import ProbabilityVector, ConfluenceSeries, RandomWalk
from .confluence import ScoredPair, ScgParams, ScgResult, ConfluenceExtractor
from .sw_metrics import (DegreeHistogram, PowerLawFit, ErReference, ErComparison,
                         SmallWorldReport, SmallWorldMetrics)
from .pipeline import (MakeswParams, Provenance, MakeswResult, SweepRecord,
                       ErGenerator, PipelineManager)
from .reports import ReportWriter
from .settings_manager import SettingsManager
from .message_log import MessageLog

__all__ = [
    'SmallWorldError',
    'Graph',
    'ComponentLabeling',
    'StructureAnalyzer',
    'EdgeListCodec',
    'ProbabilityVector',
    'ConfluenceSeries',
    'RandomWalk',
    'ScoredPair',
    'ScgParams',
    'ScgResult',
    'ConfluenceExtractor',
    'DegreeHistogram',
    'PowerLawFit',
    'ErReference',
    'ErComparison',
    'SmallWorldReport',
    'SmallWorldMetrics',
    'MakeswParams',
    'Provenance',
    'MakeswResult',
    'SweepRecord',
    'ErGenerator',
    'PipelineManager',
    'ReportWriter',
    'SettingsManager',
    'MessageLog'
]
